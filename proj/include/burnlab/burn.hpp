#pragma once
#include <optional>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

// Ordered source sequence for the threshold burning process.
struct BurnSequence {
  std::vector<int> sources;
  int threshold = 2;
};

enum class BurnOutcome { completed, stalled };

// Round-by-round record of one run. rounds[j] is the blue set after round j,
// with rounds[0] the empty start state.
struct BurnTrace {
  std::vector<Bits> rounds;
  BurnOutcome outcome{};
  int final_round = 0;  // completion round, or the round the stall was detected
  int consumed = 0;     // sequence entries delivered before termination

  std::optional<int> rd() const {
    if (outcome == BurnOutcome::completed) return final_round;
    return std::nullopt;
  }
};

// Runs the process: in round j the j-th source (if any) turns blue unless it
// already is, and every uncolored vertex with at least `threshold` blue
// neighbours at the END OF ROUND j-1 turns blue. A source delivered in round
// j never feeds round-j spread. Terminates on completion, or stalls once the
// sequence is exhausted and a round adds nothing.
BurnTrace simulate(const Graph& g, const BurnSequence& s);

// One round of threshold spread: uncolored vertices with >= threshold blue
// neighbours in `blue`. Shared with the percolation engine.
Bits spread_step(const Graph& g, Bits blue, int threshold);

struct NecessityViolation {
  enum class Kind { leaf_unsourced, degree2_pair_unsourced } kind;
  int u;
  int v = -1;  // second vertex for pair violations
};

// Structural requirements every completing threshold-2 sequence satisfies:
// each leaf appears among the sources, and each adjacent degree-2 pair
// contributes at least one source. A reported violation certifies the
// sequence stalls.
std::vector<NecessityViolation> necessity_check(const Graph& g,
                                                const BurnSequence& s);

}  // namespace burnlab
