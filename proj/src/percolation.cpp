#include "burnlab/percolation.hpp"

#include <stdexcept>

#include "burnlab/burn.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/solver.hpp"

namespace burnlab {

std::optional<int> percolate_mask(const Graph& g, Bits seeds, int threshold) {
  Bits full = g.full_mask();
  Bits blue = seeds;
  int round = 0;
  while (blue != full) {
    Bits next = blue | spread_step(g, blue, threshold);
    if (next == blue) return std::nullopt;
    blue = next;
    ++round;
  }
  return round;
}

std::optional<int> percolate(const Graph& g, const std::vector<int>& seeds,
                             int threshold) {
  Bits mask = 0;
  for (int v : seeds) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("seed index out of range");
    mask |= bit(v);
  }
  return percolate_mask(g, mask, threshold);
}

namespace {

// Closure of a seed set at the spread fixpoint (ignores round counts).
Bits closure(const Graph& g, Bits seeds, int threshold) {
  Bits blue = seeds;
  for (;;) {
    Bits next = blue | spread_step(g, blue, threshold);
    if (next == blue) return blue;
    blue = next;
  }
}

struct SetSearch {
  const Graph& g;
  int r;
  Bits full;
  std::vector<Bits> suffix_mask;  // {v, v+1, ..., n-1}
  bool found = false;
  int best_rounds = 0;
  Bits best_set = 0;

  // Enumerates every k-subset in lexicographic order, skipping branches
  // whose closure cannot reach full even with all remaining candidates.
  void enumerate(Bits chosen, int start, int left) {
    if (left == 0) {
      if (auto rounds = percolate_mask(g, chosen, r)) {
        if (!found || *rounds < best_rounds) {
          found = true;
          best_rounds = *rounds;
          best_set = chosen;
        }
      }
      return;
    }
    int n = g.vertex_count();
    for (int v = start; v + left <= n; ++v) {
      if (closure(g, chosen | suffix_mask[v], r) != full) return;
      enumerate(chosen | bit(v), v + 1, left - 1);
    }
  }
};

}  // namespace

PercolationResult min_percolating(const Graph& g, const PercolationOptions& opts) {
  int n = g.vertex_count();
  if (opts.threshold < 1) throw std::invalid_argument("threshold must be >= 1");
  if (n > opts.max_vertices)
    throw LimitError("percolating set search limited to " +
                     std::to_string(opts.max_vertices) + " vertices");
  if (!g.is_connected())
    throw std::invalid_argument("percolating set search expects a connected graph");

  SetSearch search{g, opts.threshold, g.full_mask(), {}, false, 0, 0};
  search.suffix_mask.assign(n + 1, 0);
  for (int v = n - 1; v >= 0; --v)
    search.suffix_mask[v] = search.suffix_mask[v + 1] | bit(v);

  for (int k = 1; k <= n; ++k) {
    search.enumerate(0, 0, k);
    if (search.found) {
      PercolationResult result;
      result.m = k;
      result.tau = search.best_rounds;
      for (Bits m = search.best_set; m; m &= m - 1)
        result.witness_set.push_back(lowest_bit(m));
      return result;
    }
  }
  // Unreachable: the full vertex set always percolates (in zero rounds).
  throw std::logic_error("percolating set search fell through");
}

SandwichReport sandwich_check(const Graph& g, const PercolationOptions& perc_opts) {
  SandwichReport rep;
  auto perc = min_percolating(g, perc_opts);
  SolveOptions solve_opts;
  solve_opts.threshold = perc_opts.threshold;
  solve_opts.max_vertices = std::max(perc_opts.max_vertices, solve_opts.max_vertices);
  auto b = burning_number(g, solve_opts);
  if (!b.value) throw std::logic_error("burning number search fell through");
  auto t = source_number(g, *b.value, solve_opts);
  if (!t.value) throw std::logic_error("source count search fell through");

  rep.m = perc.m;
  rep.tau = perc.tau;
  rep.b2 = *b.value;
  rep.t2 = *t.value;
  rep.holds = rep.m <= rep.t2 && rep.t2 <= rep.b2 && rep.b2 <= rep.m + rep.tau;
  rep.tight_m_t2 = rep.m == rep.t2;
  rep.tight_t2_b2 = rep.t2 == rep.b2;
  rep.tight_b2_mtau = rep.b2 == rep.m + rep.tau;
  return rep;
}

}  // namespace burnlab
