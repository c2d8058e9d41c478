#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "burnlab/family.hpp"

using namespace burnlab;

TEST_CASE("spec strings round-trip") {
  for (const char* text :
       {"path:7", "cycle:12", "complete:5", "kbip:4,6", "spider:5,3,4,2",
        "wheel:30", "corona(cycle:3)", "join(path:2,path:3)",
        "cart(path:4,path:3)", "corona(cart(path:2,path:2))"}) {
    auto spec = FamilySpec::parse(text);
    CHECK(spec.to_string() == text);
    CHECK(spec_vertex_count(spec) == generate(spec).vertex_count());
  }
}

TEST_CASE("spec validation rejects bad parameters") {
  CHECK_THROWS_AS(FamilySpec::parse("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("path:0"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("spider:1,1"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("spider:1,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("wheel:2"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("kbip:0,3"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("nonsense:3"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("cart(path:3)"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("path:3,4"), std::invalid_argument);
}

TEST_CASE("generated shapes have the expected structure") {
  CHECK(make_path(8).edge_count() == 7);
  CHECK(make_cycle(8).edge_count() == 8);
  CHECK(make_complete(6).edge_count() == 15);
  CHECK(make_complete_bipartite(3, 4).edge_count() == 12);

  Graph spider = make_spider({3, 2, 2});
  CHECK(spider.vertex_count() == 8);
  CHECK(spider.degree(0) == 3);          // hub
  CHECK(spider.vertex_name(0) == "hub");
  CHECK(spider.degree(3) == 1);          // tip of the first leg
  CHECK(spider.vertex_name(1) == "leg1.1");

  Graph wheel = make_wheel(7);
  CHECK(wheel.vertex_count() == 8);
  CHECK(wheel.edge_count() == 14);
  CHECK(wheel.degree(7) == 7);  // hub is last

  Graph crown = corona_of(make_cycle(4));
  CHECK(crown.vertex_count() == 8);
  for (int v = 0; v < 4; ++v) {
    CHECK(crown.degree(v) == 3);
    CHECK(crown.degree(4 + v) == 1);
    CHECK(crown.has_edge(v, 4 + v));
  }
  CHECK(crown.vertex_name(4) == "0'");

  Graph joined = join_of(make_path(2), make_path(3));
  CHECK(joined.vertex_count() == 5);
  CHECK(joined.edge_count() == 1 + 2 + 6);

  Graph box = cartesian_of(make_path(4), make_path(3));
  CHECK(box.vertex_count() == 12);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 3; ++v)
      CHECK(box.degree(u * 3 + v) ==
            make_path(4).degree(u) + make_path(3).degree(v));
  CHECK(box.vertex_name(0) == "(0,0)");
  CHECK(box.vertex_name(5) == "(1,2)");
}

TEST_CASE("product of paths is the grid from the burn examples") {
  Graph box = cartesian_of(make_path(2), make_path(2));
  CHECK(box.edge_count() == 4);  // the 4-cycle
  CHECK(box.same_structure(cartesian_of(make_path(2), make_path(2))));
}

TEST_CASE("file specs load edge lists") {
  std::string path = "family_file_test.edges";
  {
    std::ofstream out(path);
    out << "4 4\n0 1\n1 2\n2 3\n3 0\n";
  }
  auto spec = FamilySpec::parse("file:" + path);
  Graph g = generate(spec);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(spec_vertex_count(spec) == 4);
  CHECK(spec.to_string() == "file:" + path);
  std::remove(path.c_str());
  CHECK_THROWS_AS(generate(FamilySpec::parse("file:does_not_exist.edges")),
                  std::invalid_argument);
}

TEST_CASE("product sizes follow the count law") {
  const char* pool[] = {"path:4", "cycle:5", "complete:4", "spider:1,1,1",
                        "wheel:5"};
  for (const char* a : pool) {
    for (const char* b : pool) {
      Graph ga = generate(FamilySpec::parse(a));
      Graph gb = generate(FamilySpec::parse(b));
      if (ga.vertex_count() * gb.vertex_count() > 30) continue;
      Graph box = cartesian_of(ga, gb);
      CHECK(box.vertex_count() == ga.vertex_count() * gb.vertex_count());
      CHECK(box.edge_count() == ga.vertex_count() * gb.edge_count() +
                                    gb.vertex_count() * ga.edge_count());
    }
  }
}

TEST_CASE("corona adds exactly one leaf per base vertex") {
  for (const char* spec : {"path:5", "cycle:6", "complete:4", "wheel:4"}) {
    Graph base = generate(FamilySpec::parse(spec));
    Graph crown = corona_of(base);
    CHECK(structural_stats(crown).leaves == base.vertex_count());
  }
}

TEST_CASE("serialization round-trips every generated family") {
  const char* pool[] = {"path:7",          "cycle:9",         "complete:5",
                        "kbip:3,4",        "spider:3,2,2",    "wheel:8",
                        "corona(path:3)",  "join(path:2,cycle:3)",
                        "cart(path:3,path:4)"};
  for (const char* spec : pool) {
    Graph g = generate(FamilySpec::parse(spec));
    std::string text = g.to_edge_list();
    Graph back = Graph::from_edge_list(text);
    CHECK(back.to_edge_list() == text);
    CHECK(back.same_structure(g));
  }
}
