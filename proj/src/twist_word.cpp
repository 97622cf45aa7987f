#include "twistlab/twist_word.hpp"

#include "twistlab/errors.hpp"

#include <charconv>
#include <sstream>

namespace twistlab {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Malformed, "exponent overflow");
  return out;
}

}  // namespace

TwistWord::TwistWord(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  for (const auto& s : syllables_) {
    if (s.exponent == 0) throw Error(ErrorKind::Malformed, "zero exponent on curve '" + s.curve + "'");
    if (s.curve.empty()) throw Error(ErrorKind::Malformed, "empty curve name");
  }
}

TwistWord TwistWord::parse(std::string_view text) {
  std::vector<Syllable> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    Syllable s;
    s.curve = token.substr(0, caret);
    if (s.curve.empty()) throw Error(ErrorKind::Malformed, "missing curve name in token '" + token + "'");
    if (caret != std::string::npos) {
      std::string_view exp = std::string_view(token).substr(caret + 1);
      if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), s.exponent);
      if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size())
        throw Error(ErrorKind::Malformed, "bad exponent in token '" + token + "'");
    }
    out.push_back(std::move(s));
  }
  return TwistWord(std::move(out));
}

bool TwistWord::is_normalized() const {
  for (std::size_t i = 1; i < syllables_.size(); ++i)
    if (syllables_[i].curve == syllables_[i - 1].curve) return false;
  return true;
}

TwistWord TwistWord::concat(const TwistWord& other) const {
  auto out = syllables_;
  out.insert(out.end(), other.syllables_.begin(), other.syllables_.end());
  return TwistWord(std::move(out));
}

TwistWord TwistWord::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return TwistWord(std::move(out));
}

TwistWord TwistWord::power(unsigned k) const {
  TwistWord out;
  for (unsigned i = 0; i < k; ++i) out = out.concat(*this);
  return out;
}

std::string TwistWord::str() const {
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.curve;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

TwistWord normalize(const TwistWord& word) {
  // Stack-based so that cancellations cascade: a b b^-1 a^-1 -> identity.
  std::vector<Syllable> stack;
  for (const auto& s : word.syllables()) {
    if (!stack.empty() && stack.back().curve == s.curve) {
      stack.back().exponent = checked_add(stack.back().exponent, s.exponent);
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return TwistWord(std::move(stack));
}

TwistWord cyclic_reduce(const TwistWord& word) {
  std::vector<Syllable> s = normalize(word).syllables();
  std::size_t lo = 0, hi = s.size();  // live range [lo, hi)
  while (hi - lo >= 2 && s[lo].curve == s[hi - 1].curve) {
    const Exponent merged = checked_add(s[lo].exponent, s[hi - 1].exponent);
    --hi;
    if (merged == 0) {
      ++lo;
    } else {
      s[lo].exponent = merged;
    }
  }
  return TwistWord(std::vector<Syllable>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                         s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::vector<TwistWord> syllable_prefixes(const TwistWord& word) {
  std::vector<TwistWord> out;
  out.reserve(word.size() + 1);
  const auto& s = word.syllables();
  for (std::size_t i = 0; i <= s.size(); ++i)
    out.emplace_back(std::vector<Syllable>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i)));
  return out;
}

BlockDecomposition block_decompose(const TwistWord& word,
                                   const std::map<CurveId, MulticurveId>& partition) {
  BlockDecomposition out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = partition.find(word[i].curve);
    if (it == partition.end())
      throw Error(ErrorKind::UnknownCurve, "curve '" + word[i].curve + "' is in no multicurve");
    if (!out.blocks.empty() && out.blocks.back().multicurve == it->second) {
      out.blocks.back().end = i + 1;
    } else {
      out.blocks.push_back({it->second, i, i + 1});
    }
  }
  return out;
}

}  // namespace twistlab
