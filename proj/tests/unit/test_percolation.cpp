#include "doctest.h"

#include "burnlab/errors.hpp"
#include "burnlab/family.hpp"
#include "burnlab/percolation.hpp"
#include "oracle/naive.hpp"

using namespace burnlab;

TEST_CASE("percolate runs the closure round by round") {
  Graph k3 = make_complete(3);
  CHECK(percolate(k3, {0, 1}) == 1);
  CHECK_FALSE(percolate(k3, {0}).has_value());
  CHECK(percolate(k3, {0, 1, 2}) == 0);  // full seed: nothing left to do
  CHECK_THROWS_AS(percolate(k3, {5}), std::invalid_argument);

  // Diagonal of the 3x3 grid percolates.
  Graph grid = cartesian_of(make_path(3), make_path(3));
  auto r = percolate(grid, {0, 4, 8});
  REQUIRE(r.has_value());
  CHECK(*r > 0);
}

TEST_CASE("minimum percolating sets on known graphs") {
  auto p4 = min_percolating(make_path(4));
  CHECK(p4.m == 3);
  CHECK(p4.tau == 1);

  auto c5 = min_percolating(make_cycle(5));
  CHECK(c5.m == 3);
  CHECK(c5.tau == 1);

  auto k6 = min_percolating(make_complete(6));
  CHECK(k6.m == 2);
  CHECK(k6.tau == 1);

  auto grid3 = min_percolating(cartesian_of(make_path(3), make_path(3)));
  CHECK(grid3.m == 3);

  // The witness really percolates at the reported speed.
  auto r = percolate(make_cycle(5), c5.witness_set);
  REQUIRE(r.has_value());
  CHECK(*r == c5.tau);
}

TEST_CASE("tau scans every minimum set, not just the first") {
  // On P_5, {0,2,4} finishes in one round while other minimum sets are
  // slower; tau must report the fastest.
  auto p5 = min_percolating(make_path(5));
  CHECK(p5.m == 3);
  CHECK(p5.tau == 1);
}

TEST_CASE("percolation search is capped") {
  CHECK_THROWS_AS(min_percolating(make_path(26)), LimitError);
  CHECK_THROWS_AS(min_percolating(Graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("matches the subset-scan oracle on small families") {
  using testing::naive_min_percolating;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g :
         {make_path(n), make_cycle(n), make_complete(n), make_spider({1, 1, 1})}) {
      auto fast = min_percolating(g);
      auto slow = naive_min_percolating(g, 2);
      CHECK(fast.m == slow.m);
      CHECK(fast.tau == slow.tau);
    }
  }
}

TEST_CASE("sandwich chain holds and reports tightness") {
  auto rep = sandwich_check(make_path(4));
  CHECK(rep.m == 3);
  CHECK(rep.t2 == 3);
  CHECK(rep.b2 == 3);
  CHECK(rep.tau == 1);
  CHECK(rep.holds);
  CHECK(rep.tight_m_t2);
  CHECK(rep.tight_t2_b2);

  CHECK(sandwich_check(make_wheel(6)).holds);
  CHECK(sandwich_check(make_complete(7)).holds);
}
