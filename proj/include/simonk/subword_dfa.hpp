// subword_dfa.hpp -- the automaton of the subwords of u up to length k

#ifndef SIMONK_SUBWORD_DFA_HPP_
#define SIMONK_SUBWORD_DFA_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "simonk/word.hpp"

namespace simonk {

inline constexpr std::size_t kDefaultDfaBudget = 1'000'000;

/// DFA accepting {w subword of u : |w| <= k}. A state (level, position)
/// records how many instructions were consumed and where the last one
/// landed; the initial state is (0, 0), every materialized state is final,
/// and the sink collecting missing transitions stays implicit. Only states
/// reachable from (0, 0) are materialized, at most k*|u| + 2 of them
/// counting the sink.
struct SubwordDfa {
  static constexpr std::uint32_t kSink = std::numeric_limits<std::uint32_t>::max();

  struct State {
    Coord level = 0;
    Position pos = 0;  // 0 only in the initial state
  };

  Alphabet alphabet;
  std::uint64_t k = 0;
  std::vector<State> states;         // id 0 = (0, 0)
  std::vector<std::uint32_t> delta;  // states.size() x |A|, kSink if missing

  std::size_t live_states() const noexcept { return states.size(); }

  std::uint32_t step(std::uint32_t from, std::size_t letter_rank) const {
    return from == kSink ? kSink : delta[from * alphabet.size() + letter_rank];
  }
};

/// Build the automaton from a precomputed next-occurrence table, breadth
/// first from (0, 0).
SubwordDfa build_subword_dfa(const Word& u, std::uint64_t k);

/// Standard DFA run; true iff the run never falls into the sink.
bool dfa_accepts(const SubwordDfa& d, const Word& w);

/// Language equality by breadth-first search over the product automaton,
/// looking for a pair with differing acceptance. Refuses after more than
/// `max_pairs` explored pairs.
bool dfa_language_equal(const SubwordDfa& a, const SubwordDfa& b,
                        std::size_t max_pairs = kDefaultDfaBudget);

/// u ~k v via the two subword automata. Refuses when the automata would
/// exceed `budget` states combined.
bool dfa_equivalent(const Word& u, const Word& v, std::uint64_t k,
                    std::size_t budget = kDefaultDfaBudget);

/// DOT rendering with states named "(level,pos)"; the sink is omitted.
std::string to_dot(const SubwordDfa& d);

}  // namespace simonk

#endif  // SIMONK_SUBWORD_DFA_HPP_
