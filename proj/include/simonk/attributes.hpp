// attributes.hpp -- linear attribute passes: x-coordinates, y-coordinates, deletion

#ifndef SIMONK_ATTRIBUTES_HPP_
#define SIMONK_ATTRIBUTES_HPP_

#include <cstdint>
#include <vector>

#include "simonk/word.hpp"

namespace simonk {

/// Attribute of a position: x is the length of a shortest X-ranker reaching
/// it, y the length of a shortest Y-ranker.
struct Attribute {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// x_i for every position, computed in one left-to-right pass with one
/// counter per letter. Counters saturate at k + 2; every value above k + 1
/// behaves the same in all later tests, so saturation is transparent.
std::vector<Coord> x_coordinates(const Word& u, std::uint64_t k);

/// Result of the right-to-left pass: y-coordinates of the word *after*
/// removing the marked positions, plus the marks themselves. Unmarked
/// positions carry both coordinates and satisfy x + y <= k + 1; marked
/// positions carry x only. The input word is never modified.
struct AnnotatedWord {
  Word word;
  std::uint64_t k = 0;
  std::vector<Coord> x;
  std::vector<Coord> y;  // meaningful where !deleted
  std::vector<bool> deleted;

  std::size_t survivor_count() const;
};

/// Right-to-left pass: position i with label c is kept iff
/// x_i + n_c <= k + 1, else marked for deletion with the counters left
/// untouched. `x` must come from x_coordinates(u, k). The surviving x and y
/// values are the exact coordinates of the word with the marked letters
/// removed.
AnnotatedWord y_coordinates_with_deletion(const Word& u, std::vector<Coord> x,
                                          std::uint64_t k);

/// Exact attributes of u itself: unsaturated x-pass forwards for x, the
/// mirrored pass on the reversed word for y. No deletion.
std::vector<Attribute> attributes(const Word& u);

}  // namespace simonk

#endif  // SIMONK_ATTRIBUTES_HPP_
