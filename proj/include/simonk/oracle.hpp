// oracle.hpp -- exponential reference implementations for desk-scale checking

#ifndef SIMONK_ORACLE_HPP_
#define SIMONK_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simonk/ranker.hpp"
#include "simonk/word.hpp"

namespace simonk {

inline constexpr std::size_t kDefaultSetGuard = 1'000'000;
inline constexpr std::size_t kDefaultNaiveLen = 9;
inline constexpr std::size_t kDefaultNaiveAlphabet = 4;

/// All subwords of one word up to a length bound, sorted shortlex under the
/// alphabet order (so the empty word comes first and set equality is a
/// plain vector comparison).
struct SubwordSet {
  Alphabet alphabet;
  std::uint64_t k = 0;
  std::vector<std::string> words;
};

/// Exact set {w : w subword of u, |w| <= k}, by dynamic programming over
/// the positions. Refuses when the a-priori size bound sum_{j<=k} |A|^j
/// exceeds `guard`, unless forced.
SubwordSet subwords_up_to(const Word& u, std::uint64_t k,
                          std::size_t guard = kDefaultSetGuard,
                          bool force = false);

/// u ~k v by direct subword-set comparison.
bool naive_equivalent(const Word& u, const Word& v, std::uint64_t k,
                      std::size_t guard = kDefaultSetGuard,
                      bool force = false);

/// First word of the shortlex enumeration of A^* that is ~k-equivalent
/// to u; by construction the shortest such word and the lexicographically
/// least among those. Exponential; refuses |u| > max_len or alphabets
/// larger than max_alphabet unless forced.
Word naive_shortlex(const Word& u, std::uint64_t k,
                    std::size_t max_len = kDefaultNaiveLen,
                    std::size_t max_alphabet = kDefaultNaiveAlphabet,
                    bool force = false);

/// Length of a shortest X- or Y-ranker reaching position i: breadth-first
/// search over reachable positions, one modality step per edge. The ground
/// truth for the attribute passes.
Coord shortest_ranker_length(const Word& u, Position i, Direction direction);

/// Canonical witness separating u and v at parameter k: the shortlex-least
/// word of length <= k lying in exactly one of the two subword sets, or
/// nullopt iff u ~k v.
std::optional<Word> distinguishing_subword(const Word& u, const Word& v,
                                           std::uint64_t k,
                                           std::size_t guard = kDefaultSetGuard,
                                           bool force = false);

}  // namespace simonk

#endif  // SIMONK_ORACLE_HPP_
