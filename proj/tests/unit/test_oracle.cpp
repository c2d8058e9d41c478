#include "doctest.h"

#include "burnlab/corpus.hpp"
#include "burnlab/solver.hpp"
#include "oracle/naive.hpp"

using namespace burnlab;

// The optimized solver against blind sequence enumeration on every small
// connected graph. Thresholds above 2 exercise the generic spread path.
TEST_CASE("solver matches exhaustive enumeration up to five vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (int r = 1; r <= 3; ++r) {
        auto want = testing::naive_burn(g, r);
        SolveOptions opts;
        opts.threshold = r;
        auto got = burning_number(g, opts);
        REQUIRE(got.value.has_value());
        CHECK_MESSAGE(*got.value == want.b,
                      "n=" << n << " r=" << r << " edges=" << g.edge_count());
        auto srcs = source_number(g, *got.value, opts);
        REQUIRE(srcs.value.has_value());
        CHECK_MESSAGE(*srcs.value == want.t,
                      "n=" << n << " r=" << r << " edges=" << g.edge_count());
      }
    }
  }
}
