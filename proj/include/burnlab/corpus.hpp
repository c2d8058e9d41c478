#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

// One representative per isomorphism class of connected graphs on n vertices.
// Built by vertex extension with canonical-form dedup; refuses n > 7 (853
// classes) because the next level would take minutes, not seconds.
std::vector<Graph> connected_graphs(int n);

// Deterministic random connected graph: a random recursive tree on n vertices
// plus each chord independently with probability edge_prob. Identical output
// for identical arguments on every platform.
Graph random_connected(int n, double edge_prob, std::uint64_t seed);

// Remove one uniformly chosen edge whose removal keeps the graph connected.
// Returns nothing when the graph is a tree (every edge is a bridge).
std::optional<Graph> drop_one_edge(const Graph& g, std::uint64_t seed);

}  // namespace burnlab
