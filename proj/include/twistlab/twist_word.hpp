#pragma once

// Dehn-twist words: products T_{c_1}^{e_1} T_{c_2}^{e_2} ... stored as a
// syllable sequence in the order they are written.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab {

using CurveId = std::string;
using Exponent = std::int64_t;

struct Syllable {
  CurveId curve;
  Exponent exponent = 1;  // never 0

  bool operator==(const Syllable&) const = default;
};

class TwistWord {
 public:
  TwistWord() = default;
  /// Throws Error{Malformed} on a zero exponent.
  explicit TwistWord(std::vector<Syllable> syllables);

  /// Parses whitespace-separated `curve^exp` tokens; `curve` alone means
  /// exponent 1. Throws Error{Malformed}.
  static TwistWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }

  /// True when no two adjacent syllables share a curve.
  bool is_normalized() const;

  TwistWord concat(const TwistWord& other) const;
  TwistWord inverse() const;
  TwistWord power(unsigned k) const;

  std::string str() const;

  bool operator==(const TwistWord&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Merges adjacent syllables on the same curve; drops zero totals.
TwistWord normalize(const TwistWord& word);

/// Conjugates a normalized word until its first and last syllables lie on
/// different curves (or the word is empty / a single syllable).
TwistWord cyclic_reduce(const TwistWord& word);

/// f_0 = identity, f_1, ..., f_k: the first i syllables.
std::vector<TwistWord> syllable_prefixes(const TwistWord& word);

using MulticurveId = std::string;

struct Block {
  MulticurveId multicurve;
  std::size_t begin = 0;  // first syllable index
  std::size_t end = 0;    // one past the last

  bool operator==(const Block&) const = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;

  /// Number of A/B block pairs (blocks / 2) for an even block count.
  std::size_t pairs() const { return blocks.size() / 2; }
};

/// Maximal runs of syllables whose curves lie in the same multicurve.
/// Throws Error{UnknownCurve} if a curve is missing from `partition`.
BlockDecomposition block_decompose(const TwistWord& word,
                                   const std::map<CurveId, MulticurveId>& partition);

}  // namespace twistlab
