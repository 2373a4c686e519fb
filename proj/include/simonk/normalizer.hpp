// normalizer.hpp -- the shortlex normal form pipeline and the ~k test

#ifndef SIMONK_NORMALIZER_HPP_
#define SIMONK_NORMALIZER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "simonk/attributes.hpp"
#include "simonk/word.hpp"

namespace simonk {

/// A word in shortlex normal form together with the attributes of its
/// positions and the congruence parameter it is normal for. Every attribute
/// satisfies x + y <= k + 1, and normalizing again returns it unchanged.
struct NormalForm {
  Word word;
  std::vector<Attribute> attributes;
  std::uint64_t k = 0;
};

/// Maximal run [start, end] (1-based, inclusive) of positions of a
/// length-minimal word sharing one attribute with x + y = k + 1. Letters
/// inside such a run commute freely within the ~k-class; each letter occurs
/// at most once per run, so a run never exceeds |A| positions.
struct SortBlock {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SortBlock&, const SortBlock&) = default;
};

/// The blocks of an attribute sequence (already restricted to survivors).
std::vector<SortBlock> sort_blocks_in(std::span<const Attribute> attrs,
                                      std::uint64_t k);

/// Phase 2: emit the survivors of `aw` with each block's letters rewritten
/// in ascending alphabet order; everything else passes through unchanged.
/// Requires every surviving position to satisfy x + y <= k + 1, which
/// y_coordinates_with_deletion guarantees.
Word sort_blocks(const AnnotatedWord& aw);

/// The unique shortest, lexicographically least word ~k-equivalent to u,
/// with its attributes. One x-pass, one y-pass with deletion, one block
/// sort: O(|A| n) overall, for every k.
NormalForm shortlex_normal_form(const Word& u, std::uint64_t k);

/// u ~k v, decided by comparing shortlex normal forms.
bool equivalent(const Word& u, const Word& v, std::uint64_t k);

}  // namespace simonk

#endif  // SIMONK_NORMALIZER_HPP_
