#pragma once
#include <optional>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

struct PercolationOptions {
  int threshold = 2;
  int max_vertices = 25;  // subset search refuses beyond this
};

struct PercolationResult {
  int m = 0;                     // minimum percolating set size
  std::vector<int> witness_set;  // one minimum set achieving tau
  int tau = 0;                   // fastest completion among ALL minimum sets
};

// Synchronous bootstrap process: the whole seed set is blue at round 0 and
// every round colors the uncolored vertices with >= threshold blue
// neighbours. Returns the first all-blue round, or nullopt at a fixpoint
// short of completion. A full seed percolates in 0 rounds.
std::optional<int> percolate(const Graph& g, const std::vector<int>& seeds,
                             int threshold = 2);
std::optional<int> percolate_mask(const Graph& g, Bits seeds, int threshold = 2);

// Exhaustive cardinality-increasing search for the minimum percolating set.
// tau scans every minimum-size percolating set and keeps the fastest; the
// witness is the first set (in lexicographic order) achieving tau.
PercolationResult min_percolating(const Graph& g,
                                  const PercolationOptions& opts = {});

struct SandwichReport {
  int m = 0, tau = 0, t2 = 0, b2 = 0;
  bool holds = false;       // m <= t2 <= b2 <= m + tau
  bool tight_m_t2 = false;
  bool tight_t2_b2 = false;
  bool tight_b2_mtau = false;
};

// Computes both engines' quantities on one graph and checks the chain
// m <= t2 <= b2 <= m + tau, reporting which links are tight.
SandwichReport sandwich_check(const Graph& g,
                              const PercolationOptions& perc_opts = {});

}  // namespace burnlab
