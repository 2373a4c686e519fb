#include "simonk/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <unordered_set>

namespace simonk {

namespace {

bool shortlex_less(const std::string& a, const std::string& b,
                   const Alphabet& alpha) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ra = alpha.index_of(a[i]);
    const int rb = alpha.index_of(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

// sum_{j=0..min(k,n)} |A|^j, saturating just above `cap`.
std::uint64_t subword_count_bound(std::size_t alphabet_size, std::uint64_t k,
                                  std::size_t n, std::uint64_t cap) {
  const std::uint64_t base = std::max<std::uint64_t>(alphabet_size, 1);
  const std::uint64_t depth = std::min<std::uint64_t>(k, n);
  std::uint64_t total = 1;
  std::uint64_t power = 1;
  for (std::uint64_t j = 0; j < depth; ++j) {
    if (power > cap / base) return cap + 1;
    power *= base;
    total += power;
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace

SubwordSet subwords_up_to(const Word& u, std::uint64_t k, std::size_t guard,
                          bool force) {
  const Alphabet& alpha = u.alphabet();
  if (!force &&
      subword_count_bound(alpha.size(), k, u.size(), guard) > guard) {
    throw GuardExceeded("subword set of the given word may exceed " +
                        std::to_string(guard) +
                        " elements; use force to compute it anyway");
  }
  std::unordered_set<std::string> seen{""};
  std::vector<std::string> fresh;
  for (const char c : u.symbols()) {
    fresh.clear();
    for (const std::string& w : seen) {
      if (w.size() < k) fresh.push_back(w + c);
    }
    seen.insert(fresh.begin(), fresh.end());
  }
  SubwordSet out{alpha, k, std::vector<std::string>(seen.begin(), seen.end())};
  std::sort(out.words.begin(), out.words.end(),
            [&](const std::string& a, const std::string& b) {
              return shortlex_less(a, b, alpha);
            });
  return out;
}

bool naive_equivalent(const Word& u, const Word& v, std::uint64_t k,
                      std::size_t guard, bool force) {
  if (!(u.alphabet() == v.alphabet())) {
    throw std::invalid_argument(
        "naive_equivalent: words over different alphabets");
  }
  return subwords_up_to(u, k, guard, force).words ==
         subwords_up_to(v, k, guard, force).words;
}

Word naive_shortlex(const Word& u, std::uint64_t k, std::size_t max_len,
                    std::size_t max_alphabet, bool force) {
  if (!force && (u.size() > max_len || u.alphabet().size() > max_alphabet)) {
    throw GuardExceeded(
        "naive_shortlex refuses words longer than " + std::to_string(max_len) +
        " or alphabets larger than " + std::to_string(max_alphabet));
  }
  const Alphabet& alpha = u.alphabet();
  const std::vector<std::string> target = subwords_up_to(u, k, 0, true).words;
  std::string cand;
  std::function<bool(std::size_t)> first_match =
      [&](std::size_t remaining) -> bool {
    if (remaining == 0) {
      return subwords_up_to(Word(cand, alpha), k, 0, true).words == target;
    }
    for (std::size_t r = 0; r < alpha.size(); ++r) {
      cand.push_back(alpha.letter(r));
      if (first_match(remaining - 1)) return true;
      cand.pop_back();
    }
    return false;
  };
  for (std::size_t len = 0; len <= u.size(); ++len) {
    cand.clear();
    if (first_match(len)) return Word(cand, alpha);
  }
  throw std::logic_error("naive_shortlex: no equivalent word found");
}

Coord shortest_ranker_length(const Word& u, Position i, Direction direction) {
  if (i < 1 || i > u.size()) {
    throw std::invalid_argument("shortest_ranker_length: position out of range");
  }
  if (direction == Direction::Y) {
    return shortest_ranker_length(reversed(u), mirror_position(u.size(), i),
                                  Direction::X);
  }
  const std::string& s = u.symbols();
  const std::size_t n = s.size();
  constexpr Coord kUnset = std::numeric_limits<Coord>::max();
  std::vector<Coord> dist(n + 1, kUnset);
  dist[0] = 0;
  std::vector<Position> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Position from = queue[head];
    std::array<bool, 256> stepped{};
    for (std::size_t idx = from; idx < n; ++idx) {
      const auto b = static_cast<unsigned char>(s[idx]);
      if (stepped[b]) continue;
      stepped[b] = true;
      const Position to = idx + 1;
      if (dist[to] == kUnset) {
        dist[to] = dist[from] + 1;
        queue.push_back(to);
      }
    }
  }
  if (dist[i] == kUnset) {
    throw std::logic_error("shortest_ranker_length: position unreachable");
  }
  return dist[i];
}

std::optional<Word> distinguishing_subword(const Word& u, const Word& v,
                                           std::uint64_t k, std::size_t guard,
                                           bool force) {
  if (!(u.alphabet() == v.alphabet())) {
    throw std::invalid_argument(
        "distinguishing_subword: words over different alphabets");
  }
  const Alphabet& alpha = u.alphabet();
  const std::vector<std::string> su = subwords_up_to(u, k, guard, force).words;
  const std::vector<std::string> sv = subwords_up_to(v, k, guard, force).words;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < su.size() && j < sv.size()) {
    if (su[i] == sv[j]) {
      ++i;
      ++j;
    } else if (shortlex_less(su[i], sv[j], alpha)) {
      return Word(su[i], alpha);
    } else {
      return Word(sv[j], alpha);
    }
  }
  if (i < su.size()) return Word(su[i], alpha);
  if (j < sv.size()) return Word(sv[j], alpha);
  return std::nullopt;
}

}  // namespace simonk
