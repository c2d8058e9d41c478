#pragma once
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burnlab/bits.hpp"

namespace burnlab {

inline constexpr int kMaxVertices = 64;

// Immutable simple graph on vertices 0..n-1 with dense adjacency bitsets.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {});

  // Edge-list text format: first non-comment line "n m", then m lines "u v".
  // '#' starts a comment line, blank lines are skipped, duplicate edges
  // collapse, self-loops are rejected.
  static Graph from_edge_list(std::string_view text);
  std::string to_edge_list() const;  // canonical: edges sorted, u < v

  int vertex_count() const { return n_; }
  int edge_count() const;
  int degree(int v) const { return popcount(adj_[v]); }
  Bits neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return test_bit(adj_[u], v); }
  Bits full_mask() const { return mask_below(n_); }
  bool is_connected() const;

  bool same_structure(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

  // Optional human-readable vertex names (family generators fill these in).
  const std::vector<std::string>& labels() const { return labels_; }
  std::string vertex_name(int v) const;

 private:
  int n_;
  std::vector<Bits> adj_;
  std::vector<std::string> labels_;
};

struct StructuralStats {
  int leaves = 0;            // degree-1 vertices
  int deg2_chain_cover = 0;  // min sources forced by adjacent degree-2 runs
};

// Counts the structural source obligations visible from degrees alone:
// every leaf must appear in any threshold-2 source sequence, and each
// component of the subgraph induced by degree-2 vertices forces a vertex
// cover's worth of sources (floor(c/2) per path run, ceil(c/2) per cycle).
StructuralStats structural_stats(const Graph& g);

// Exact minimum dominating set by cardinality-increasing exhaustive search.
// Ties break to the lexicographically smallest set. Connected input only;
// instances past exact_limit vertices are refused via LimitError.
std::vector<int> min_dominating_set(const Graph& g, int exact_limit = 24);

}  // namespace burnlab
