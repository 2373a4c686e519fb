#include "simonk/ranker.hpp"

#include <algorithm>
#include <functional>

namespace simonk {

namespace {

char direction_tag(Direction d) { return d == Direction::X ? 'X' : 'Y'; }

// Smallest c-position greater than `after` (1-based), or 0.
Position next_occurrence(const std::string& s, Position after, char c) {
  for (std::size_t j = after; j < s.size(); ++j) {
    if (s[j] == c) return j + 1;
  }
  return 0;
}

// Greatest c-position smaller than `before` (1-based), or 0.
Position previous_occurrence(const std::string& s, Position before, char c) {
  for (std::size_t j = before - 1; j-- > 0;) {
    if (s[j] == c) return j + 1;
  }
  return 0;
}

void check_position(const Word& u, Position i, const char* who) {
  if (i < 1 || i > u.size()) {
    throw std::invalid_argument(std::string(who) + ": position out of range");
  }
}

CanonicalRankerTable canonical_x_table(const Word& u) {
  const std::string& s = u.symbols();
  const Alphabet& alpha = u.alphabet();
  const std::size_t n = s.size();
  std::vector<Coord> counter(alpha.size(), 1);
  std::vector<Position> latest(alpha.size(), 0);
  CanonicalRankerTable t{Direction::X, u, std::vector<Coord>(n),
                         std::vector<Position>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(alpha.index_of(s[i]));
    t.coord[i] = counter[c];
    t.pred[i] = latest[c];
    ++counter[c];
    latest[c] = i + 1;
    for (std::size_t a = 0; a < counter.size(); ++a) {
      if (counter[c] < counter[a]) {
        counter[a] = counter[c];
        latest[a] = latest[c];
      }
    }
  }
  return t;
}

}  // namespace

std::string to_string(const Ranker& r) {
  std::string out(1, direction_tag(r.direction));
  out += ':';
  out += r.modalities;
  return out;
}

Ranker parse_ranker(std::string_view text) {
  if (text.size() < 3 || text[1] != ':' || (text[0] != 'X' && text[0] != 'Y')) {
    throw std::invalid_argument("ranker syntax is X:<letters> or Y:<letters>");
  }
  return Ranker{text[0] == 'X' ? Direction::X : Direction::Y,
                std::string(text.substr(2))};
}

Ranker ranker_defined_by(const Word& w, Direction direction) {
  if (w.empty()) {
    throw std::invalid_argument("the empty word defines no ranker");
  }
  std::string mods = w.symbols();
  if (direction == Direction::Y) std::reverse(mods.begin(), mods.end());
  return Ranker{direction, std::move(mods)};
}

std::optional<Position> eval_ranker(const Ranker& r, const Word& u) {
  if (r.modalities.empty()) {
    throw std::invalid_argument("rankers are nonempty");
  }
  for (char c : r.modalities) {
    if (!u.alphabet().contains(c)) {
      throw std::invalid_argument("ranker letter outside the word's alphabet");
    }
  }
  const std::string& s = u.symbols();
  if (r.direction == Direction::X) {
    Position pos = 0;
    for (char c : r.modalities) {
      pos = next_occurrence(s, pos, c);
      if (pos == 0) return std::nullopt;
    }
    return pos;
  }
  Position pos = u.size() + 1;
  for (char c : r.modalities) {
    pos = previous_occurrence(s, pos, c);
    if (pos == 0) return std::nullopt;
  }
  return pos;
}

PredecessorDag predecessor_dag(const Word& u) {
  if (u.empty()) {
    throw std::invalid_argument("predecessor_dag: word must be nonempty");
  }
  const std::string& s = u.symbols();
  const Alphabet& alpha = u.alphabet();
  const std::size_t n = s.size();
  std::vector<Coord> counter(alpha.size(), 1);
  std::vector<std::vector<Position>> pending(alpha.size());
  PredecessorDag dag{u, std::vector<Coord>(n),
                     std::vector<std::vector<Position>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(alpha.index_of(s[i]));
    dag.x[i] = counter[c];
    dag.preds[i] = pending[c];
    ++counter[c];
    pending[c].assign(1, i + 1);
    for (std::size_t a = 0; a < counter.size(); ++a) {
      if (a == c) continue;
      if (counter[c] < counter[a]) {
        counter[a] = counter[c];
        pending[a] = pending[c];
      } else if (counter[c] == counter[a]) {
        pending[a].push_back(i + 1);
      }
    }
  }
  return dag;
}

std::vector<Ranker> enumerate_rankers(const PredecessorDag& dag, Position i,
                                      std::size_t cap) {
  check_position(dag.word, i, "enumerate_rankers");
  if (cap == 0) throw std::invalid_argument("enumerate_rankers: cap must be positive");

  // Count DAG paths first, saturating at cap + 1. Distinct paths spell
  // distinct rankers: two positions in one predecessor set never share a
  // label.
  std::vector<std::size_t> paths(i + 1, 0);
  for (Position p = 1; p <= i; ++p) {
    const auto& ps = dag.preds[p - 1];
    std::size_t total = ps.empty() ? 1 : 0;
    for (Position q : ps) {
      total += paths[q];
      if (total > cap) {
        total = cap + 1;
        break;
      }
    }
    paths[p] = total;
  }
  if (paths[i] > cap) {
    throw RankerCapExceeded("more than " + std::to_string(cap) +
                            " minimal-length rankers reach position " +
                            std::to_string(i));
  }

  const std::string& s = dag.word.symbols();
  std::vector<Ranker> out;
  out.reserve(paths[i]);
  struct Frame {
    Position pos;
    std::size_t idx;
  };
  std::vector<Frame> stack{{i, 0}};
  std::string labels(1, s[i - 1]);  // from i downwards, i.e. reversed
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& ps = dag.preds[f.pos - 1];
    if (ps.empty()) {
      out.push_back(
          Ranker{Direction::X, std::string(labels.rbegin(), labels.rend())});
      stack.pop_back();
      labels.pop_back();
      continue;
    }
    if (f.idx == ps.size()) {
      stack.pop_back();
      labels.pop_back();
      continue;
    }
    const Position q = ps[f.idx++];
    stack.push_back(Frame{q, 0});
    labels.push_back(s[q - 1]);
  }

  const Alphabet& alpha = dag.word.alphabet();
  std::sort(out.begin(), out.end(), [&](const Ranker& a, const Ranker& b) {
    const std::size_t len = std::min(a.modalities.size(), b.modalities.size());
    for (std::size_t t = 0; t < len; ++t) {
      const int ra = alpha.index_of(a.modalities[t]);
      const int rb = alpha.index_of(b.modalities[t]);
      if (ra != rb) return ra < rb;
    }
    return a.modalities.size() < b.modalities.size();
  });
  return out;
}

CanonicalRankerTable canonical_rankers(const Word& u, Direction direction) {
  if (u.empty()) {
    throw std::invalid_argument("canonical_rankers: word must be nonempty");
  }
  if (direction == Direction::X) return canonical_x_table(u);
  const std::size_t n = u.size();
  const CanonicalRankerTable rev = canonical_x_table(reversed(u));
  CanonicalRankerTable t{Direction::Y, u, std::vector<Coord>(n),
                         std::vector<Position>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    t.coord[i] = rev.coord[j];
    t.pred[i] = rev.pred[j] == 0 ? 0 : mirror_position(n, rev.pred[j]);
  }
  return t;
}

std::vector<Position> ranker_positions(const CanonicalRankerTable& table,
                                       Position i) {
  check_position(table.word, i, "ranker_positions");
  std::vector<Position> chain;
  for (Position cur = i; cur != 0; cur = table.pred[cur - 1]) {
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Ranker read_ranker(const CanonicalRankerTable& table, Position i) {
  std::string mods;
  for (Position p : ranker_positions(table, i)) {
    mods.push_back(table.word.symbols()[p - 1]);
  }
  return Ranker{table.direction, std::move(mods)};
}

Ranker canonical_ranker_oracle(const Word& u, Position i,
                               std::size_t max_len) {
  check_position(u, i, "canonical_ranker_oracle");
  if (u.size() > max_len) {
    throw GuardExceeded("canonical_ranker_oracle refuses words longer than " +
                        std::to_string(max_len));
  }
  const std::string& s = u.symbols();
  const Alphabet& alpha = u.alphabet();

  // Materialize R^u_i: all modality strings of the minimal length whose
  // X-ranker reaches i. X-rankers move strictly right, so prefixes that
  // overshoot i are dead and can be dropped without losing any candidate.
  struct Cand {
    std::string mods;
    std::vector<Position> visited;
  };
  std::vector<Cand> cands;
  std::string mods;
  std::vector<Position> visited;
  std::function<void(Position, std::size_t)> extend =
      [&](Position from, std::size_t remaining) {
        if (remaining == 0) {
          if (from == i) cands.push_back(Cand{mods, visited});
          return;
        }
        for (std::size_t r = 0; r < alpha.size(); ++r) {
          const char c = alpha.letter(r);
          const Position to = next_occurrence(s, from, c);
          if (to == 0 || to > i) continue;
          mods.push_back(c);
          visited.push_back(to);
          extend(to, remaining - 1);
          mods.pop_back();
          visited.pop_back();
        }
      };
  std::size_t len = 0;
  while (cands.empty()) {
    if (++len > u.size()) {
      throw std::logic_error("canonical_ranker_oracle: position unreachable");
    }
    extend(0, len);
  }

  // Right-to-left minimization: keep the rankers whose length-j prefix
  // reaches the minimal position, for j = len-1 down to 1.
  for (std::size_t j = len - 1; j >= 1; --j) {
    Position best = 0;
    for (const Cand& c : cands) {
      if (best == 0 || c.visited[j - 1] < best) best = c.visited[j - 1];
    }
    std::erase_if(cands, [&](const Cand& c) { return c.visited[j - 1] != best; });
  }
  // Survivors agree on every visited position, hence on every modality.
  return Ranker{Direction::X, cands.front().mods};
}

}  // namespace simonk
