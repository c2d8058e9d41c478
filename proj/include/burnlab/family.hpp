#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

enum class FamilyKind {
  path,
  cycle,
  complete,
  complete_bipartite,
  spider,
  wheel,
  corona,
  join,
  cartesian,
  file,
};

// Parsed instance description. Grammar:
//   path:7  cycle:12  complete:5  kbip:4,6  spider:5,3,4,2  wheel:30
//   corona(cycle:3)  join(path:2,path:3)  cart(path:4,path:3)  file:PATH
struct FamilySpec {
  FamilyKind kind{};
  std::vector<int> params;          // sizes, or leg lengths for spiders
  std::vector<FamilySpec> children; // corona / join / cart operands
  std::string file_path;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  void validate() const;  // throws std::invalid_argument on bad parameters
};

// Builds the described graph with the canonical numbering:
//   paths and cycles consecutive; kbip left side first; spider hub 0 with
//   legs numbered leg by leg outward; wheel rim 0..n-1 and hub last; corona
//   leaf of vertex i at n+i; cartesian (u,v) -> u*|V(H)|+v; join left block
//   first. file: loads the edge-list file.
Graph generate(const FamilySpec& spec);

// Number of vertices the spec describes (reads the file for file specs).
int spec_vertex_count(const FamilySpec& spec);

// Direct builders, used by generate() and by corpus-driven checks that have
// a raw base graph rather than a spec.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_spider(const std::vector<int>& legs);
Graph make_wheel(int rim);
Graph corona_of(const Graph& base);
Graph join_of(const Graph& a, const Graph& b);
Graph cartesian_of(const Graph& a, const Graph& b);

}  // namespace burnlab
