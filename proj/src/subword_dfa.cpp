#include "simonk/subword_dfa.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace simonk {

SubwordDfa build_subword_dfa(const Word& u, std::uint64_t k) {
  const std::string& s = u.symbols();
  const Alphabet& alpha = u.alphabet();
  const std::size_t n = s.size();
  const std::size_t a_count = alpha.size();

  // next[i * |A| + a] = smallest a-position > i, or 0.
  std::vector<Position> next((n + 1) * std::max<std::size_t>(a_count, 1), 0);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t a = 0; a < a_count; ++a) {
      next[i * a_count + a] = next[(i + 1) * a_count + a];
    }
    next[i * a_count + static_cast<std::size_t>(alpha.index_of(s[i]))] = i + 1;
  }

  SubwordDfa d{alpha, k, {}, {}};
  d.states.push_back(SubwordDfa::State{0, 0});
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  ids.emplace(0, 0);
  for (std::uint32_t cur = 0; cur < d.states.size(); ++cur) {
    const SubwordDfa::State st = d.states[cur];
    d.delta.insert(d.delta.end(), a_count, SubwordDfa::kSink);
    if (st.level >= k) continue;
    for (std::size_t a = 0; a < a_count; ++a) {
      const Position j = next[st.pos * a_count + a];
      if (j == 0) continue;
      const std::uint64_t key =
          static_cast<std::uint64_t>(st.level + 1) * (n + 1) + j;
      const auto [it, fresh] =
          ids.emplace(key, static_cast<std::uint32_t>(d.states.size()));
      if (fresh) {
        d.states.push_back(SubwordDfa::State{st.level + 1, j});
      }
      d.delta[static_cast<std::size_t>(cur) * a_count + a] = it->second;
    }
  }
  return d;
}

bool dfa_accepts(const SubwordDfa& d, const Word& w) {
  if (!(w.alphabet() == d.alphabet)) {
    throw std::invalid_argument("dfa_accepts: word over a different alphabet");
  }
  std::uint32_t state = 0;
  for (const char c : w.symbols()) {
    state = d.step(state, static_cast<std::size_t>(d.alphabet.index_of(c)));
    if (state == SubwordDfa::kSink) return false;
  }
  return true;
}

bool dfa_language_equal(const SubwordDfa& a, const SubwordDfa& b,
                        std::size_t max_pairs) {
  if (!(a.alphabet == b.alphabet)) {
    throw std::invalid_argument(
        "dfa_language_equal: automata over different alphabets");
  }
  const std::size_t a_count = a.alphabet.size();
  const std::uint64_t na = a.states.size() + 1;  // extra slot for the sink
  const std::uint64_t nb = b.states.size() + 1;
  const auto slot = [&](std::uint32_t s, std::uint32_t t) {
    const std::uint64_t si = s == SubwordDfa::kSink ? na - 1 : s;
    const std::uint64_t ti = t == SubwordDfa::kSink ? nb - 1 : t;
    return si * nb + ti;
  };

  const std::uint64_t total = na * nb;
  const bool dense = total <= (1u << 26);
  std::vector<bool> seen_dense;
  std::unordered_set<std::uint64_t> seen_sparse;
  if (dense) seen_dense.assign(total, false);
  const auto mark = [&](std::uint64_t key) {
    if (dense) {
      if (seen_dense[key]) return false;
      seen_dense[key] = true;
      return true;
    }
    return seen_sparse.insert(key).second;
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
  mark(slot(0, 0));
  queue.emplace_back(0, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (queue.size() > max_pairs) {
      throw GuardExceeded("dfa_language_equal: product search exceeds " +
                          std::to_string(max_pairs) + " state pairs");
    }
    const auto [s, t] = queue[head];
    const bool fa = s != SubwordDfa::kSink;
    const bool fb = t != SubwordDfa::kSink;
    if (fa != fb) return false;
    if (!fa) continue;  // both in the sink, which only loops to itself
    for (std::size_t r = 0; r < a_count; ++r) {
      const std::uint32_t sn = a.step(s, r);
      const std::uint32_t tn = b.step(t, r);
      if (mark(slot(sn, tn))) queue.emplace_back(sn, tn);
    }
  }
  return true;
}

bool dfa_equivalent(const Word& u, const Word& v, std::uint64_t k,
                    std::size_t budget) {
  if (!(u.alphabet() == v.alphabet())) {
    throw std::invalid_argument(
        "dfa_equivalent: words over different alphabets");
  }
  // States per automaton are bounded by min(k, n) * n + 2.
  const std::uint64_t load =
      std::min<std::uint64_t>(k, u.size()) * u.size() +
      std::min<std::uint64_t>(k, v.size()) * v.size() + 4;
  if (load > budget) {
    throw GuardExceeded("dfa_equivalent: automata need about " +
                        std::to_string(load) + " states, over the budget of " +
                        std::to_string(budget));
  }
  return dfa_language_equal(build_subword_dfa(u, k), build_subword_dfa(v, k),
                            budget);
}

std::string to_dot(const SubwordDfa& d) {
  const auto name = [](const SubwordDfa::State& st) {
    return "(" + std::to_string(st.level) + "," + std::to_string(st.pos) + ")";
  };
  std::string out = "digraph subword_dfa {\n  rankdir=LR;\n";
  out += "  start [shape=point];\n";
  for (const SubwordDfa::State& st : d.states) {
    out += "  \"" + name(st) + "\" [shape=doublecircle];\n";
  }
  out += "  start -> \"(0,0)\";\n";
  for (std::size_t id = 0; id < d.states.size(); ++id) {
    for (std::size_t r = 0; r < d.alphabet.size(); ++r) {
      const std::uint32_t to = d.delta[id * d.alphabet.size() + r];
      if (to == SubwordDfa::kSink) continue;
      out += "  \"" + name(d.states[id]) + "\" -> \"" + name(d.states[to]) +
             "\" [label=\"" + std::string(1, d.alphabet.letter(r)) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace simonk
