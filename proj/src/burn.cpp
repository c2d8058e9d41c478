#include "burnlab/burn.hpp"

#include <stdexcept>

namespace burnlab {

Bits spread_step(const Graph& g, Bits blue, int threshold) {
  Bits out = 0;
  for (Bits m = g.full_mask() & ~blue; m; m &= m - 1) {
    int v = lowest_bit(m);
    if (popcount(g.neighbors(v) & blue) >= threshold) out |= bit(v);
  }
  return out;
}

BurnTrace simulate(const Graph& g, const BurnSequence& s) {
  if (s.threshold < 1) throw std::invalid_argument("threshold must be >= 1");
  for (int v : s.sources)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("source index out of range");

  BurnTrace trace;
  Bits blue = 0;
  Bits full = g.full_mask();
  int m = static_cast<int>(s.sources.size());
  trace.rounds.push_back(blue);

  for (int j = 1;; ++j) {
    Bits next = blue | spread_step(g, blue, s.threshold);
    if (j <= m) next |= bit(s.sources[j - 1]);
    trace.rounds.push_back(next);
    if (next == full) {
      trace.outcome = BurnOutcome::completed;
      trace.final_round = j;
      trace.consumed = std::min(m, j);
      return trace;
    }
    if (j > m && next == blue) {
      trace.outcome = BurnOutcome::stalled;
      trace.final_round = j;
      trace.consumed = m;
      return trace;
    }
    blue = next;
  }
}

std::vector<NecessityViolation> necessity_check(const Graph& g,
                                                const BurnSequence& s) {
  if (s.threshold != 2)
    throw std::invalid_argument("necessity check applies to threshold 2 only");
  Bits sourced = 0;
  for (int v : s.sources) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("source index out of range");
    sourced |= bit(v);
  }

  std::vector<NecessityViolation> out;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1 && !test_bit(sourced, v))
      out.push_back({NecessityViolation::Kind::leaf_unsourced, v});
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != 2 || test_bit(sourced, u)) continue;
    for (Bits m = g.neighbors(u) & ~mask_below(u + 1); m; m &= m - 1) {
      int v = lowest_bit(m);
      if (g.degree(v) == 2 && !test_bit(sourced, v))
        out.push_back({NecessityViolation::Kind::degree2_pair_unsourced, u, v});
    }
  }
  return out;
}

}  // namespace burnlab
