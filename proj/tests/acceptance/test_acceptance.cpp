#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/closed_form.hpp"
#include "burnlab/corpus.hpp"
#include "burnlab/family.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/percolation.hpp"
#include "burnlab/solver.hpp"
#include "oracle/naive.hpp"

using namespace burnlab;

namespace {

struct Exact {
  int b2 = 0;
  int t2 = 0;
};

// Solve both quantities and insist the returned witnesses actually replay.
Exact solve_exact(const Graph& g, const std::string& tag) {
  SolveOptions opts;
  auto b = burning_number(g, opts);
  REQUIRE_MESSAGE(b.value.has_value(), tag);
  auto rb = simulate(g, b.witness);
  REQUIRE_MESSAGE(rb.outcome == BurnOutcome::completed, tag);
  REQUIRE_MESSAGE(rb.final_round == *b.value, tag);

  auto t = source_number(g, *b.value, opts);
  REQUIRE_MESSAGE(t.value.has_value(), tag);
  auto rt = simulate(g, t.witness);
  REQUIRE_MESSAGE(rt.outcome == BurnOutcome::completed, tag);
  REQUIRE_MESSAGE(rt.final_round <= *b.value, tag);
  REQUIRE_MESSAGE(static_cast<int>(t.witness.sources.size()) == *t.value, tag);
  REQUIRE_MESSAGE(rt.consumed == *t.value, tag);
  return {*b.value, *t.value};
}

Exact solve_family(const std::string& spec, const std::string& tag) {
  return solve_exact(generate(FamilySpec::parse(spec)), tag);
}

int ceil_sqrt(int n) {
  int s = 0;
  while (s * s < n) ++s;
  return s;
}

int ceil_half_plus_one(int n) { return (n + 1) / 2 + 1; }

}  // namespace

TEST_CASE("criterion 1: path and cycle values for n up to 15") {
  for (int n = 2; n <= 15; ++n) {
    auto got = solve_family("path:" + std::to_string(n), "path n=" + std::to_string(n));
    CHECK_MESSAGE(got.b2 == ceil_half_plus_one(n), "path n=" << n);
    int want_t = (n % 2 == 0) ? got.b2 : got.b2 - 1;
    CHECK_MESSAGE(got.t2 == want_t, "path n=" << n);
  }
  for (int n = 3; n <= 15; ++n) {
    auto got = solve_family("cycle:" + std::to_string(n), "cycle n=" + std::to_string(n));
    CHECK_MESSAGE(got.b2 == ceil_half_plus_one(n), "cycle n=" << n);
    CHECK_MESSAGE(got.t2 == (n + 1) / 2, "cycle n=" << n);
  }
}

TEST_CASE("criterion 2: named instances") {
  CHECK(solve_family("path:7", "P7").b2 == 5);
  CHECK(solve_family("path:12", "P12").b2 == 7);
  CHECK(solve_family("wheel:8", "W8").b2 == 4);
  for (int n = 3; n <= 8; ++n) {
    auto got = solve_family("complete:" + std::to_string(n), "K" + std::to_string(n));
    CHECK_MESSAGE(got.b2 == 3, "complete n=" << n);
    CHECK_MESSAGE(got.t2 == 2, "complete n=" << n);
  }
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      std::string spec = "kbip:" + std::to_string(m) + "," + std::to_string(n);
      auto got = solve_family(spec, spec);
      int want_b = (std::min(m, n) >= 4) ? 4 : 3;
      CHECK_MESSAGE(got.b2 == want_b, spec);
      auto form = closed_form(FamilySpec::parse(spec));
      CHECK_MESSAGE(form.b2.exact(), spec);
      CHECK_MESSAGE(form.b2.lo == want_b, spec);
      CHECK_MESSAGE(form.t2.contains(got.t2), spec);
    }
  }
}

TEST_CASE("criterion 3: spider closed forms across all leg multisets") {
  std::vector<std::vector<int>> multisets;
  std::vector<int> legs;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      if (legs.size() >= 3) multisets.push_back(legs);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      legs.push_back(part);
      self(self, remaining - part, part);
      legs.pop_back();
    }
  };
  for (int total = 3; total <= 12; ++total) rec(rec, total, total);  // n <= 13

  for (const auto& multiset : multisets) {
    std::string spec = "spider:";
    for (size_t i = 0; i < multiset.size(); ++i)
      spec += (i ? "," : "") + std::to_string(multiset[i]);
    auto form = closed_form(FamilySpec::parse(spec));
    REQUIRE_MESSAGE(form.b2.exact(), spec);
    REQUIRE_MESSAGE(form.t2.exact(), spec);
    auto got = solve_family(spec, spec);
    CHECK_MESSAGE(got.b2 == form.b2.lo, spec);
    CHECK_MESSAGE(got.t2 == form.t2.lo, spec);
    int odd_legs = 0;
    for (int leg : multiset) odd_legs += leg % 2;
    int want_t = (odd_legs == 0 || odd_legs == 2) ? got.b2 - 1 : got.b2;
    CHECK_MESSAGE(got.t2 == want_t, spec);
  }
}

TEST_CASE("criterion 4: wheel values witnesses and the gap instance") {
  {
    auto got = solve_family("wheel:4", "W4");
    CHECK(got.b2 == 3);
    CHECK(closed_form(FamilySpec::parse("wheel:4")).t2.contains(got.t2));
  }
  for (int n = 5; n <= 14; ++n) {
    std::string tag = "wheel n=" + std::to_string(n);
    auto got = solve_family("wheel:" + std::to_string(n), tag);
    int k = ceil_sqrt(n + 6);
    CHECK_MESSAGE(got.b2 == k, tag);
    int want_t = k;  // fallback when no m satisfies the budget identity
    for (int m = 2; m <= k; ++m)
      if (m * (2 * k - m) >= n + 6) {
        want_t = m;
        break;
      }
    CHECK_MESSAGE(got.t2 == want_t, tag);
  }

  // Recorded witnesses replay on the big wheels (no solver at this size).
  {
    Graph w30 = generate(FamilySpec::parse("wheel:30"));
    auto tr = simulate(w30, BurnSequence{{0, 7, 14, 20, 24, 26}, 2});
    CHECK(tr.outcome == BurnOutcome::completed);
    CHECK(tr.final_round == 6);
  }
  {
    Graph w26 = generate(FamilySpec::parse("wheel:26"));
    auto tr = simulate(w26, BurnSequence{{0, 7, 14, 20}, 2});
    CHECK(tr.outcome == BurnOutcome::completed);
    CHECK(tr.final_round == 6);
  }

  auto gap = solve_family("wheel:11", "W11");
  CHECK(gap.b2 - gap.t2 == 2);
}

TEST_CASE("criterion 5: product values and bound containment") {
  for (const char* spec : {"cart(complete:5,complete:3)", "cart(complete:4,complete:4)"}) {
    auto got = solve_family(spec, spec);
    CHECK_MESSAGE(got.b2 == 5, spec);
    CHECK_MESSAGE(got.t2 == 2, spec);
  }
  {
    auto got = solve_family("cart(cycle:4,cycle:4)", "C4xC4");
    CHECK(got.b2 == 5);
    CHECK(got.t2 == 4);
  }
  {
    Graph g = generate(FamilySpec::parse("cart(path:4,path:3)"));
    auto tr = simulate(g, BurnSequence{{0, 4, 8, 10, 9}, 2});
    CHECK(tr.outcome == BurnOutcome::completed);
    CHECK(tr.final_round == 5);
    CHECK(solve_exact(g, "P4xP3").b2 == 5);
  }

  // Bound containment over every basic factor pair up to 20 vertices.
  std::vector<std::pair<std::string, int>> pool;
  for (int n = 2; n <= 10; ++n) pool.emplace_back("path:" + std::to_string(n), n);
  for (int n = 3; n <= 10; ++n) pool.emplace_back("cycle:" + std::to_string(n), n);
  for (int n = 2; n <= 10; ++n) pool.emplace_back("complete:" + std::to_string(n), n);
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = i; j < pool.size(); ++j) {
      if (pool[i].second * pool[j].second > 20) continue;
      auto sa = FamilySpec::parse(pool[i].first);
      auto sb = FamilySpec::parse(pool[j].first);
      auto bounds = product_bounds(closed_form(sa), pool[i].second,
                                   closed_form(sb), pool[j].second);
      std::string tag = "cart(" + pool[i].first + "," + pool[j].first + ")";
      auto got = solve_exact(cartesian_of(generate(sa), generate(sb)), tag);
      CHECK_MESSAGE(bounds.b2.contains(got.b2), tag << " b2=" << got.b2);
      CHECK_MESSAGE(bounds.t2.contains(got.t2), tag << " t2=" << got.t2);
    }
  }
}

TEST_CASE("criterion 6: corona values over every small connected base") {
  for (int n = 1; n <= 6; ++n) {
    int index = 0;
    for (const auto& base : connected_graphs(n)) {
      std::string tag = "corona base n=" + std::to_string(n) + " #" + std::to_string(index++);
      Graph crown = corona_of(base);
      auto got = solve_exact(crown, tag);
      CHECK_MESSAGE(got.b2 == n + 1, tag);
      CHECK_MESSAGE(got.t2 == n + 1, tag);
      auto tr = simulate(crown, corona_sequence(base));
      CHECK_MESSAGE(tr.outcome == BurnOutcome::completed, tag);
      CHECK_MESSAGE(tr.final_round == n + 1, tag);
    }
  }
}

TEST_CASE("criterion 7: percolation extremals and the sandwich chain") {
  for (int n = 3; n <= 8; ++n) {
    auto perc = min_percolating(generate(FamilySpec::parse("complete:" + std::to_string(n))));
    CHECK_MESSAGE(perc.m == 2, "complete n=" << n);
    CHECK_MESSAGE(perc.tau == 1, "complete n=" << n);
  }
  for (int n = 2; n <= 5; ++n) {
    Graph grid = generate(FamilySpec::parse(
        "cart(path:" + std::to_string(n) + ",path:" + std::to_string(n) + ")"));
    auto perc = min_percolating(grid);
    CHECK_MESSAGE(perc.m == n, "grid n=" << n);
  }
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + i % 7;
    double p = 0.2 + 0.25 * ((i / 7) % 3);
    Graph g = random_connected(n, p, 20240901ULL + i);
    auto sw = sandwich_check(g);
    CHECK_MESSAGE(sw.holds, "random i=" << i << " n=" << n);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("criterion 8: solver equals blind enumeration") {
  for (int n = 1; n <= 7; ++n) {
    int index = 0;
    for (const auto& g : connected_graphs(n)) {
      std::string tag = "n=" + std::to_string(n) + " #" + std::to_string(index++);
      for (int r : {1, 2}) {
        auto want = testing::naive_burn(g, r);
        SolveOptions opts;
        opts.threshold = r;
        auto got = burning_number(g, opts);
        REQUIRE_MESSAGE(got.value.has_value(), tag);
        CHECK_MESSAGE(*got.value == want.b, tag << " r=" << r);
      }
    }
  }
  for (int n = 3; n <= 20; ++n) {
    auto got = burning_1(generate(FamilySpec::parse("cycle:" + std::to_string(n))));
    REQUIRE(got.value.has_value());
    CHECK_MESSAGE(*got.value == ceil_sqrt(n), "single-threshold cycle n=" << n);
  }
}

TEST_CASE("criterion 9: witness replay monotonicity and necessity") {
  // Replay plus necessity on every solver output over the full small corpus.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      SolveOptions opts;
      auto b = burning_number(g, opts);
      REQUIRE(b.value.has_value());
      auto rb = simulate(g, b.witness);
      CHECK(rb.outcome == BurnOutcome::completed);
      CHECK(rb.final_round == *b.value);
      CHECK(necessity_check(g, b.witness).empty());
      auto t = source_number(g, *b.value, opts);
      REQUIRE(t.value.has_value());
      auto rt = simulate(g, t.witness);
      CHECK(rt.outcome == BurnOutcome::completed);
      CHECK(necessity_check(g, t.witness).empty());
    }
  }

  // Removing a non-bridge edge never lowers the round count.  The source
  // count is monotone only when the round count survives the removal: a
  // sparser graph that needs an extra round can finish from FEWER sources,
  // because the added round does spreading work that sources otherwise do.
  // The pool below genuinely contains such reversals, so the conditional
  // form is asserted and the reversal's existence is asserted with it.
  int pairs = 0;
  int round_ties = 0;
  int source_reversals = 0;
  for (uint64_t i = 0; pairs < 200 && i < 2000; ++i) {
    int n = 4 + static_cast<int>(i % 7);  // up to 10 vertices
    double p = 0.3 + 0.2 * (i % 3);
    Graph g = random_connected(n, p, 777000 + i);
    auto h = drop_one_edge(g, 888000 + i);
    if (!h.has_value()) continue;
    std::string tag = "pair i=" + std::to_string(i);
    auto full = solve_exact(g, tag + " full");
    auto sparse = solve_exact(*h, tag + " sparse");
    CHECK_MESSAGE(full.b2 <= sparse.b2, tag);
    if (full.b2 == sparse.b2) {
      CHECK_MESSAGE(full.t2 <= sparse.t2, tag);
      ++round_ties;
    } else if (full.t2 > sparse.t2) {
      ++source_reversals;
    }
    ++pairs;
  }
  CHECK(pairs == 200);
  CHECK(round_ties > 100);        // the conditional branch dominates the pool
  CHECK(source_reversals > 0);    // and the unconditional law really is false

  // A flagged sequence must stall; flags appear often enough to matter.
  int flagged_total = 0;
  for (uint64_t seed = 1; seed <= 150; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);
    Graph g = random_connected(n, 0.25, 990000 + seed);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    uint64_t x = seed * 0x9e3779b97f4a7c15ULL + 5;
    for (int v = 0; v + 1 < n; ++v) {
      x ^= x << 13; x ^= x >> 7; x ^= x << 17;
      std::swap(order[v], order[v + static_cast<int>(x % (n - v))]);
    }
    int len = 1 + static_cast<int>(x % (n - 1));
    order.resize(len);
    BurnSequence s{order, 2};
    auto flagged = necessity_check(g, s);
    if (flagged.empty()) continue;
    ++flagged_total;
    CHECK(simulate(g, s).outcome == BurnOutcome::stalled);
  }
  CHECK(flagged_total > 25);
}
