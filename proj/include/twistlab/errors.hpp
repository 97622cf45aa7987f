#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlab {

enum class ErrorKind {
  Malformed,
  UnknownCurve,
  MissingDistance,
  MissingProjection,
  MissingData,
  WrongShape,
  WrongAlphabet,
  ConditionUnmet,
  DegenerateMatrix,
  NotHyperbolic,
  BadParameter,
  ZeroTotal,
  BudgetExhausted,
  CoreDisjoint,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::MissingDistance: return "MissingDistance";
    case ErrorKind::MissingProjection: return "MissingProjection";
    case ErrorKind::MissingData: return "MissingData";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::WrongAlphabet: return "WrongAlphabet";
    case ErrorKind::ConditionUnmet: return "ConditionUnmet";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ZeroTotal: return "ZeroTotal";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::CoreDisjoint: return "CoreDisjoint";
  }
  return "Unknown";
}

}  // namespace twistlab
