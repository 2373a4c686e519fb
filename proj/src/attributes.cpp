#include "simonk/attributes.hpp"

#include <algorithm>
#include <limits>

namespace simonk {

namespace {

// Counter ceiling min(k, n) + 2: the stated k + 2 bound, tightened by the
// fact that an unsaturated counter never exceeds n + 1.
Coord saturation_bound(std::uint64_t k, std::size_t n) {
  if (n > std::numeric_limits<Coord>::max() - 2) {
    throw std::invalid_argument("word too long for coordinate arithmetic");
  }
  return static_cast<Coord>(std::min<std::uint64_t>(k, n) + 2);
}

std::vector<Coord> x_pass(const std::string& s, const Alphabet& alpha,
                          Coord sat) {
  std::vector<Coord> counter(alpha.size(), 1);
  std::vector<Coord> x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<std::size_t>(alpha.index_of(s[i]));
    x[i] = counter[c];
    const Coord bumped = std::min<Coord>(sat, counter[c] + 1);
    for (Coord& v : counter) v = std::min(v, bumped);
    counter[c] = bumped;
  }
  return x;
}

}  // namespace

std::vector<Coord> x_coordinates(const Word& u, std::uint64_t k) {
  return x_pass(u.symbols(), u.alphabet(), saturation_bound(k, u.size()));
}

std::size_t AnnotatedWord::survivor_count() const {
  return deleted.size() -
         static_cast<std::size_t>(
             std::count(deleted.begin(), deleted.end(), true));
}

AnnotatedWord y_coordinates_with_deletion(const Word& u, std::vector<Coord> x,
                                          std::uint64_t k) {
  if (x.size() != u.size()) {
    throw std::invalid_argument(
        "y_coordinates_with_deletion: x-coordinates do not match the word");
  }
  const std::string& s = u.symbols();
  const Alphabet& alpha = u.alphabet();
  const Coord sat = saturation_bound(k, u.size());
  AnnotatedWord aw{u, k, std::move(x), std::vector<Coord>(u.size(), 0),
                   std::vector<bool>(u.size(), false)};
  std::vector<Coord> counter(alpha.size(), 1);
  for (std::size_t i = s.size(); i-- > 0;) {
    const auto c = static_cast<std::size_t>(alpha.index_of(s[i]));
    // x_i + n_c <= k + 1, written without the k + 1 overflow.
    if (static_cast<std::uint64_t>(aw.x[i]) + counter[c] - 1 <= k) {
      aw.y[i] = counter[c];
      const Coord bumped = std::min<Coord>(sat, counter[c] + 1);
      for (Coord& v : counter) v = std::min(v, bumped);
      counter[c] = bumped;
    } else {
      aw.deleted[i] = true;
    }
  }
  return aw;
}

std::vector<Attribute> attributes(const Word& u) {
  const std::size_t n = u.size();
  const Coord sat = saturation_bound(n, n);  // never binds: exact values
  const std::vector<Coord> xs = x_pass(u.symbols(), u.alphabet(), sat);
  const std::string rev(u.symbols().rbegin(), u.symbols().rend());
  const std::vector<Coord> ys = x_pass(rev, u.alphabet(), sat);
  std::vector<Attribute> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = Attribute{xs[i], ys[n - 1 - i]};
  }
  return out;
}

}  // namespace simonk
