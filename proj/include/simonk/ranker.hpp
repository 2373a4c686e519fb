// ranker.hpp -- ranker evaluation, minimal-length ranker DAGs, canonical rankers

#ifndef SIMONK_RANKER_HPP_
#define SIMONK_RANKER_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simonk/word.hpp"

namespace simonk {

enum class Direction { X, Y };

/// A ranker: a nonempty sequence of next-letter (X) or previous-letter (Y)
/// instructions, applied left to right. `modalities` lists the instruction
/// letters in application order, so {Y, "baa"} is the ranker Y_b Y_a Y_a.
struct Ranker {
  Direction direction = Direction::X;
  std::string modalities;

  friend bool operator==(const Ranker&, const Ranker&) = default;
};

/// Serialized form, e.g. "X:eac" for X_e X_a X_c.
std::string to_string(const Ranker& r);
Ranker parse_ranker(std::string_view text);

/// The ranker defined by a word: b1..bl defines the X-ranker X_b1 .. X_bl
/// and the Y-ranker Y_bl .. Y_b1. Evaluating it is defined exactly when the
/// word is a subword.
Ranker ranker_defined_by(const Word& w, Direction direction);

/// Run the ranker on u. X starts before the word and steps to the next
/// occurrence; Y starts after the word and steps to the previous one.
/// Returns the reached 1-based position, or nullopt once a step has no
/// occurrence left (undefined propagates).
std::optional<Position> eval_ranker(const Ranker& r, const Word& u);

/// Thrown by enumerate_rankers when the requested set would exceed the cap.
struct RankerCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-position x-coordinates plus predecessor sets P_i: j is in P_i iff
/// some minimal-length X-ranker reaching i steps to i directly from j. The
/// sets represent all of R^u_i without materializing it; an empty P_i means
/// the minimal ranker is the single instruction X_{label(i)}.
struct PredecessorDag {
  Word word;
  std::vector<Coord> x;                      // x[i-1] = x_i
  std::vector<std::vector<Position>> preds;  // preds[i-1] = P_i, ascending
};

/// Single left-to-right pass maintaining counters n_a and predecessor sets
/// Q_a, one of each per letter.
PredecessorDag predecessor_dag(const Word& u);

/// Materialize R^u_i by unfolding the DAG. Every result has direction X,
/// length x_i and evaluates to i. Results are sorted by modalities in the
/// alphabet order. Throws RankerCapExceeded if more than `cap` rankers
/// would be produced; the set can grow combinatorially.
std::vector<Ranker> enumerate_rankers(const PredecessorDag& dag, Position i,
                                      std::size_t cap);

/// Canonical rankers of every position: the x- (or y-) coordinate plus one
/// predecessor pointer per position, 0 meaning the ranker starts fresh
/// there. Following the pointers from i and reading labels spells the
/// canonical ranker of i. Y tables are built on the reversed word and
/// mapped back through mirror_position, so their pointers point right.
struct CanonicalRankerTable {
  Direction direction = Direction::X;
  Word word;
  std::vector<Coord> coord;    // x_i for X tables, y_i for Y tables
  std::vector<Position> pred;  // canonical predecessor, 0 = none
};

CanonicalRankerTable canonical_rankers(const Word& u, Direction direction);

/// Positions visited by the canonical ranker of i, in application order
/// (ending at i).
std::vector<Position> ranker_positions(const CanonicalRankerTable& table,
                                       Position i);

/// The canonical ranker of position i read off the table.
Ranker read_ranker(const CanonicalRankerTable& table, Position i);

/// Reference implementation of the canonical X-ranker straight from its
/// definition: materialize all minimal-length X-rankers reaching i by
/// exhaustive search over modality strings, then filter right to left by
/// minimal reached prefix position. Exponential; refuses words longer than
/// `max_len`.
Ranker canonical_ranker_oracle(const Word& u, Position i,
                               std::size_t max_len = 16);

}  // namespace simonk

#endif  // SIMONK_RANKER_HPP_
