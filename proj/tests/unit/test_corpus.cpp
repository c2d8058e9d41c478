#include "doctest.h"

#include <set>

#include "burnlab/corpus.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/graph.hpp"

using namespace burnlab;

TEST_CASE("connected graph counts match the known sequence") {
  // 1, 1, 2, 6, 21, 112, 853 connected graphs on 1..7 vertices
  const int want[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto gs = connected_graphs(n);
    CHECK(static_cast<int>(gs.size()) == want[n - 1]);
    for (const auto& g : gs) {
      CHECK(g.vertex_count() == n);
      CHECK(g.is_connected());
    }
  }
  CHECK_THROWS_AS(connected_graphs(8), LimitError);
}

TEST_CASE("enumeration has no isomorphic duplicates at n=4") {
  // 6 classes: path, star, triangle+pendant, cycle, diamond, clique
  auto gs = connected_graphs(4);
  std::multiset<int> edge_counts;
  for (const auto& g : gs) edge_counts.insert(g.edge_count());
  CHECK(edge_counts == std::multiset<int>{3, 3, 4, 4, 5, 6});
}

TEST_CASE("random connected graphs are deterministic in the seed") {
  Graph a = random_connected(9, 0.3, 424242);
  Graph b = random_connected(9, 0.3, 424242);
  CHECK(a.to_edge_list() == b.to_edge_list());
  Graph c = random_connected(9, 0.3, 424243);
  CHECK(a.to_edge_list() != c.to_edge_list());
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_connected(7, 0.25, seed);
    CHECK(g.is_connected());
    CHECK(g.edge_count() >= 6);  // spanning tree at minimum
  }
}

TEST_CASE("edge dropping avoids bridges") {
  Graph tree = random_connected(6, 0.0, 7);
  CHECK(tree.edge_count() == 5);
  CHECK_FALSE(drop_one_edge(tree, 1).has_value());

  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto dropped = drop_one_edge(c5, 99);
  REQUIRE(dropped.has_value());
  CHECK(dropped->edge_count() == 4);
  CHECK(dropped->is_connected());
}
