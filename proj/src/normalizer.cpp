#include "simonk/normalizer.hpp"

#include <string>

namespace simonk {

std::vector<SortBlock> sort_blocks_in(std::span<const Attribute> attrs,
                                      std::uint64_t k) {
  std::vector<SortBlock> blocks;
  std::size_t i = 0;
  while (i < attrs.size()) {
    const std::uint64_t weight =
        static_cast<std::uint64_t>(attrs[i].x) + attrs[i].y - 1;
    if (weight != k) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < attrs.size() && attrs[j] == attrs[i]) ++j;
    blocks.push_back(SortBlock{i + 1, j});
    i = j;
  }
  return blocks;
}

Word sort_blocks(const AnnotatedWord& aw) {
  const std::string& s = aw.word.symbols();
  const Alphabet& alpha = aw.word.alphabet();
  std::string survivors;
  std::vector<Attribute> attrs;
  survivors.reserve(s.size());
  attrs.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (aw.deleted[i]) continue;
    if (static_cast<std::uint64_t>(aw.x[i]) + aw.y[i] - 1 > aw.k) {
      throw std::invalid_argument(
          "sort_blocks requires a length-minimal annotation (x + y <= k + 1)");
    }
    survivors.push_back(s[i]);
    attrs.push_back(Attribute{aw.x[i], aw.y[i]});
  }
  std::vector<std::size_t> count(alpha.size(), 0);
  for (const SortBlock& b : sort_blocks_in(attrs, aw.k)) {
    if (b.end == b.start) continue;
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = b.start - 1; i < b.end; ++i) {
      ++count[static_cast<std::size_t>(alpha.index_of(survivors[i]))];
    }
    std::size_t out = b.start - 1;
    for (std::size_t r = 0; r < count.size(); ++r) {
      for (std::size_t m = 0; m < count[r]; ++m) {
        survivors[out++] = alpha.letter(r);
      }
    }
  }
  return Word(std::move(survivors), alpha);
}

NormalForm shortlex_normal_form(const Word& u, std::uint64_t k) {
  if (k > u.size()) {
    // Singleton ~k-class: no word of length <= |u| shares all subwords of
    // length up to k > |u| with u except u itself.
    return NormalForm{u, attributes(u), k};
  }
  const AnnotatedWord aw =
      y_coordinates_with_deletion(u, x_coordinates(u, k), k);
  Word nf = sort_blocks(aw);
  std::vector<Attribute> attrs;
  attrs.reserve(nf.size());
  for (std::size_t i = 0; i < aw.x.size(); ++i) {
    if (!aw.deleted[i]) attrs.push_back(Attribute{aw.x[i], aw.y[i]});
  }
  return NormalForm{std::move(nf), std::move(attrs), k};
}

bool equivalent(const Word& u, const Word& v, std::uint64_t k) {
  if (!(u.alphabet() == v.alphabet())) {
    throw std::invalid_argument("equivalent: words over different alphabets");
  }
  return shortlex_normal_form(u, k).word == shortlex_normal_form(v, k).word;
}

}  // namespace simonk
