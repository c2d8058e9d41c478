#include "burnlab/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "burnlab/errors.hpp"

namespace burnlab {

namespace {

// Edge set under a relabeling, packed into the triangular bit layout for
// graphs of at most 7 vertices (21 possible edges).
std::uint64_t packed_edges(const std::vector<Bits>& adj, const std::vector<int>& perm) {
  int k = static_cast<int>(perm.size());
  std::uint64_t out = 0;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (test_bit(adj[u], v)) {
        int a = perm[u], b = perm[v];
        if (a > b) std::swap(a, b);
        out |= std::uint64_t{1} << (a * k - a * (a + 1) / 2 + (b - a - 1));
      }
  return out;
}

std::uint64_t canonical_code(const std::vector<Bits>& adj) {
  std::vector<int> perm(adj.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, packed_edges(adj, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_adjacency(const std::vector<Bits>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (test_bit(adj[u], v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n) {
    std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % static_cast<std::uint64_t>(n);
    std::uint64_t x;
    do {
      x = eng();
    } while (x >= bound);
    return static_cast<int>(x % static_cast<std::uint64_t>(n));
  }
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (n > 7)
    throw LimitError("exhaustive isomorphism classes stop at 7 vertices");

  // Grow one vertex at a time: every connected graph has a non-cut vertex,
  // so attaching a new vertex to each nonempty neighbourhood subset of each
  // smaller class reaches everything. Dedup via min-over-permutations codes.
  std::vector<std::vector<Bits>> level = {{Bits{0}}};
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<Bits>> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& adj : level) {
      for (Bits s = 1; s < bit(k); ++s) {
        std::vector<Bits> grown = adj;
        grown.push_back(s);
        for (Bits m = s; m; m &= m - 1) grown[lowest_bit(m)] |= bit(k);
        if (seen.insert(canonical_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& adj : level) out.push_back(from_adjacency(adj));
  return out;
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1 || n > 64) throw std::invalid_argument("vertex count out of range");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");

  Rng rng(seed);
  std::vector<Bits> adj(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    int u = rng.below(v);
    adj[u] |= bit(v);
    adj[v] |= bit(u);
    edges.emplace_back(u, v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (test_bit(adj[u], v)) continue;
      if (rng.unit() < edge_prob) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

std::optional<Graph> drop_one_edge(const Graph& g, std::uint64_t seed) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (test_bit(g.neighbors(u), v)) edges.emplace_back(u, v);

  std::vector<size_t> keepers;
  for (size_t i = 0; i < edges.size(); ++i) {
    std::vector<std::pair<int, int>> rest;
    for (size_t j = 0; j < edges.size(); ++j)
      if (j != i) rest.push_back(edges[j]);
    if (Graph(n, rest).is_connected()) keepers.push_back(i);
  }
  if (keepers.empty()) return std::nullopt;

  Rng rng(seed);
  size_t pick = keepers[static_cast<size_t>(rng.below(static_cast<int>(keepers.size())))];
  std::vector<std::pair<int, int>> rest;
  for (size_t j = 0; j < edges.size(); ++j)
    if (j != pick) rest.push_back(edges[j]);
  return Graph(n, rest);
}

}  // namespace burnlab
