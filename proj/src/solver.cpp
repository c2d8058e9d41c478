#include "burnlab/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "burnlab/errors.hpp"

namespace burnlab {

namespace {

// Shared state for one solve call. Memo tables record proven-infeasible
// states only; feasibility is monotone in the remaining round budget, so a
// single "largest budget known to fail" entry per state is enough.
struct Search {
  const Graph& g;
  int r;
  int n;
  Bits full;
  std::vector<Bits> adj;
  Bits low_deg = 0;   // degree < r: can never be colored by spread
  Bits deg2 = 0;      // degree exactly 2, drives the chain demand for r == 2
  SolveStats stats;
  std::vector<int> path;

  // blue set -> largest remaining-round budget proven infeasible with an
  // unlimited source supply.
  std::unordered_map<Bits, int> memo_free;
  // (blue set, source budget) -> largest remaining-round budget proven
  // infeasible when only `budget` more sources may be delivered.
  std::unordered_map<Bits, std::uint64_t> memo_budget_packed;

  explicit Search(const Graph& graph, int threshold)
      : g(graph), r(threshold), n(graph.vertex_count()), full(graph.full_mask()) {
    adj.reserve(n);
    for (int v = 0; v < n; ++v) {
      adj.push_back(g.neighbors(v));
      int d = popcount(adj.back());
      if (d < r) low_deg |= bit(v);
      if (d == 2) deg2 |= bit(v);
    }
  }

  Bits spread(Bits blue) const {
    Bits out = 0;
    for (Bits m = full & ~blue; m; m &= m - 1) {
      int v = lowest_bit(m);
      if (popcount(adj[v] & blue) >= r) out |= bit(v);
    }
    return out;
  }

  // Minimum number of future sources forced by structure: uncolored
  // low-degree vertices can only ever turn blue as sources, and for r == 2
  // each run of adjacent uncolored degree-2 vertices needs a vertex cover's
  // worth of sources among them. Each such source occupies its own round.
  int demand(Bits blue) const {
    int need = popcount(low_deg & ~blue);
    if (r != 2) return need;
    Bits todo = deg2 & ~blue;
    while (todo) {
      int start = lowest_bit(todo);
      Bits comp = bit(start);
      Bits frontier = comp;
      while (frontier) {
        Bits next = 0;
        for (Bits m = frontier; m; m &= m - 1) next |= adj[lowest_bit(m)] & todo;
        frontier = next & ~comp;
        comp |= frontier;
      }
      todo &= ~comp;
      int c = popcount(comp);
      bool cycle = true;
      for (Bits m = comp; m; m &= m - 1)
        if (popcount(adj[lowest_bit(m)] & comp) != 2) cycle = false;
      need += cycle ? (c + 1) / 2 : c / 2;
    }
    return need;
  }

  // True when spread alone finishes within rem rounds from `blue`.
  bool coasts_home(Bits blue, int rem) const {
    Bits b = blue;
    for (int t = 0; t < rem; ++t) {
      Bits nb = b | spread(b);
      if (nb == b) return false;
      if (nb == full) return true;
      b = nb;
    }
    return false;
  }

  // Unlimited-source search: can `blue` reach full within rem more rounds,
  // delivering at most one fresh source per round? Delivering a source
  // strictly earlier never hurts, so once a round goes without a source the
  // process may as well coast; that makes "no source" a leaf evaluation
  // rather than a branch, and makes the first hit the lexicographically
  // smallest witness (shorter prefixes are checked before extensions).
  bool dfs_free(Bits blue, int rem) {
    if (auto it = memo_free.find(blue); it != memo_free.end() && it->second >= rem) {
      stats.memo_hits++;
      return false;
    }
    if (demand(blue) > rem) {
      int& slot = memo_free[blue];
      slot = std::max(slot, rem);
      return false;
    }
    if (coasts_home(blue, rem)) return true;
    if (rem == 0) {
      int& slot = memo_free[blue];
      slot = std::max(slot, 0);
      return false;
    }
    Bits grown = blue | spread(blue);
    for (Bits m = full & ~blue; m; m &= m - 1) {
      int s = lowest_bit(m);
      stats.nodes++;
      Bits next = grown | bit(s);
      path.push_back(s);
      if (next == full || dfs_free(next, rem - 1)) return true;
      path.pop_back();
    }
    int& slot = memo_free[blue];
    slot = std::max(slot, rem);
    return false;
  }

  int budget_memo_get(Bits blue, int budget) {
    auto it = memo_budget_packed.find(blue);
    if (it == memo_budget_packed.end()) return -1;
    // six bits of "largest failing rem plus one" per budget value 0..9,
    // budgets >= 10 share the top slot conservatively keyed exactly.
    return static_cast<int>((it->second >> (6 * std::min(budget, 9))) & 63u) - 1;
  }

  void budget_memo_put(Bits blue, int budget, int rem) {
    int slot = std::min(budget, 9);
    std::uint64_t& word = memo_budget_packed[blue];
    int prev = static_cast<int>((word >> (6 * slot)) & 63u) - 1;
    if (budget > 9 && slot == 9) {
      // Budgets past the packed range would alias; keep only exact matches
      // out of the table rather than risk an unsound hit.
      return;
    }
    if (rem > prev) {
      word &= ~(std::uint64_t{63} << (6 * slot));
      word |= static_cast<std::uint64_t>(std::min(rem, 62) + 1) << (6 * slot);
    }
  }

  // Budgeted search for the source count: deliver exactly one fresh source
  // in each of the first `m` rounds, then coast until round `b`.
  bool dfs_budget(Bits blue, int round, int m, int b) {
    int rem = b - round + 1;
    int budget = m - round + 1;
    if (budget <= 0) return coasts_home(blue, rem);
    if (auto it = memo_free.find(blue); it != memo_free.end() && it->second >= rem) {
      stats.memo_hits++;
      return false;
    }
    if (budget <= 9) {
      if (budget_memo_get(blue, budget) >= rem) {
        stats.memo_hits++;
        return false;
      }
    }
    if (demand(blue) > budget) {
      budget_memo_put(blue, budget, rem);
      return false;
    }
    Bits grown = blue | spread(blue);
    for (Bits mask = full & ~blue; mask; mask &= mask - 1) {
      int s = lowest_bit(mask);
      stats.nodes++;
      Bits next = grown | bit(s);
      path.push_back(s);
      if (next == full) {
        if (round <= b) return true;
        path.pop_back();
        continue;
      }
      if (dfs_budget(next, round + 1, m, b)) return true;
      path.pop_back();
    }
    budget_memo_put(blue, budget, rem);
    return false;
  }
};

void check_input(const Graph& g, const SolveOptions& opts) {
  if (opts.threshold < 1) throw std::invalid_argument("threshold must be >= 1");
  if (g.vertex_count() > opts.max_vertices)
    throw LimitError("exact solve limited to " + std::to_string(opts.max_vertices) +
                     " vertices; raise the cap explicitly for larger instances");
  if (opts.require_connected && !g.is_connected())
    throw std::invalid_argument(
        "exact solve expects a connected graph (the process is defined per "
        "component; solve components separately if that is what you want)");
}

}  // namespace

int lower_bound(const Graph& g, int threshold) {
  if (threshold != 2) return 1;
  auto st = structural_stats(g);
  return std::max(1, st.leaves + st.deg2_chain_cover);
}

SolveResult burning_number(const Graph& g, const SolveOptions& opts) {
  check_input(g, opts);
  auto t0 = std::chrono::steady_clock::now();
  int n = g.vertex_count();
  int cap = opts.max_rounds > 0 ? opts.max_rounds : n;

  Search search(g, opts.threshold);
  SolveResult result;
  // Sourcing every vertex in some order finishes by round n, so the start of
  // the deepening always has a feasible level to find when cap >= n.
  for (int k = std::max(1, search.demand(0)); k <= cap; ++k) {
    search.path.clear();
    if (search.dfs_free(0, k)) {
      result.value = k;
      result.witness = BurnSequence{search.path, opts.threshold};
      break;
    }
  }
  result.stats = search.stats;
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

SolveResult source_number(const Graph& g, int known_b, const SolveOptions& opts) {
  check_input(g, opts);
  if (known_b < 1) throw std::invalid_argument("round count must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  int n = g.vertex_count();

  Search search(g, opts.threshold);
  SolveResult result;
  int floor_len = std::max(1, search.demand(0));
  if (opts.threshold >= 2 && n >= 2) floor_len = std::max(floor_len, 2);
  for (int m = floor_len; m <= known_b; ++m) {
    search.path.clear();
    if (search.dfs_budget(0, 1, m, known_b)) {
      result.value = m;
      result.witness = BurnSequence{search.path, opts.threshold};
      break;
    }
  }
  result.stats = search.stats;
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

SolveResult burning_1(const Graph& g, SolveOptions opts) {
  opts.threshold = 1;
  return burning_number(g, opts);
}

}  // namespace burnlab
