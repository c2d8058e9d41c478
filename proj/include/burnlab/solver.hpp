#pragma once
#include <cstdint>
#include <optional>

#include "burnlab/burn.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

struct SolveOptions {
  int threshold = 2;
  int max_rounds = -1;          // -1: use vertex count (always sufficient)
  int max_vertices = 30;        // advertised exact-size cap, refuse beyond
  bool require_connected = true;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double wall_ms = 0.0;
};

struct SolveResult {
  // Empty when no sequence completes within max_rounds; the instance is then
  // reported unknown above that budget rather than guessed at.
  std::optional<int> value;
  BurnSequence witness;
  SolveStats stats;
};

// Least k so that some source sequence finishes the threshold-r process in k
// rounds. Iterative deepening over k from lower_bound(g, r); per round the
// search either delivers a fresh source (tried in ascending vertex order) or
// lets the process coast to the end. Witnesses are the lexicographically
// smallest optimum, contain no wasted entries, and replay through simulate
// to exactly the reported value.
SolveResult burning_number(const Graph& g, const SolveOptions& opts = {});

// Least number of sources among sequences that finish in known_b rounds
// (pass the burning_number value). Witness length equals the result and the
// witness replays to exactly known_b rounds.
SolveResult source_number(const Graph& g, int known_b,
                          const SolveOptions& opts = {});

// Convenience wrapper for the threshold-1 process.
SolveResult burning_1(const Graph& g, SolveOptions opts = {});

// Structural round lower bound. For threshold 2 this is
// max(1, leaves + deg2_chain_cover); other thresholds get the trivial 1.
int lower_bound(const Graph& g, int threshold);

}  // namespace burnlab
