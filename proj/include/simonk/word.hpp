// word.hpp -- ordered alphabets, words over them, and the subword relation

#ifndef SIMONK_WORD_HPP_
#define SIMONK_WORD_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simonk {

/// 1-based position in a word; 0 is reserved for "no position".
using Position = std::size_t;

/// Coordinate values (ranker lengths, counter contents). Bounded by
/// |word| + 2 everywhere, so 32 bits are plenty.
using Coord = std::uint32_t;

/// Thrown when a desk-scale oracle or checker refuses an input that would
/// exceed its configured budget. Pass force (or --force) to override.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A totally ordered finite alphabet of single-byte letters. The order of
/// the letters in the constructor string is the order used for
/// "lexicographically smaller"; it is fixed for the lifetime of the value.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }

  /// Letters in ascending order; duplicates are rejected.
  explicit Alphabet(std::string_view letters);

  /// The alphabet of the distinct bytes occurring in \p text, ordered by
  /// ascending byte value. This is the CLI default when no explicit order
  /// is given.
  static Alphabet occurring_in(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  std::string_view letters() const noexcept { return letters_; }
  bool contains(char c) const noexcept { return index_of(c) >= 0; }

  /// Rank of \p c in the alphabet order, or -1 if absent.
  int index_of(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)];
  }

  char letter(std::size_t rank) const { return letters_.at(rank); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.letters_ == b.letters_;
  }

 private:
  std::string letters_;
  std::array<std::int16_t, 256> index_;
};

/// An immutable word over a fixed alphabet. Every symbol is checked against
/// the alphabet at construction; operations rely on that and skip per-call
/// checks. Positions are 1-based.
class Word {
 public:
  Word() = default;
  Word(std::string symbols, Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// Letter at 1-based position \p i.
  char at(Position i) const;

  friend bool operator==(const Word& u, const Word& v) noexcept {
    return u.alphabet_ == v.alphabet_ && u.symbols_ == v.symbols_;
  }

 private:
  std::string symbols_;
  Alphabet alphabet_;
};

/// True iff u is a scattered subword of v (greedy left-to-right matching).
/// Both words must share one alphabet.
bool is_subword(const Word& u, const Word& v);

/// True iff u is lexicographically smaller than v under the alphabet order.
/// Defined for equal-length words only; anything else is a contract error.
bool lex_less(const Word& u, const Word& v);

/// Mirror map i -> n + 1 - i used when deriving right-to-left passes from
/// left-to-right ones.
constexpr Position mirror_position(std::size_t n, Position i) noexcept {
  return n + 1 - i;
}

/// The word read back to front, over the same alphabet.
Word reversed(const Word& u);

}  // namespace simonk

#endif  // SIMONK_WORD_HPP_
