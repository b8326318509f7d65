#include <doctest.h>

#include <numeric>
#include <random>

#include "tdec/bounds.hpp"
#include "tdec/coloring.hpp"
#include "tdec/families.hpp"

using namespace tdec;

TEST_CASE("edge coloring invariants") {
  CHECK_THROWS_AS(EdgeColoring(2, {0, 0}), Error);      // class 1 empty
  CHECK_THROWS_AS(EdgeColoring(1, {0, 1}), Error);      // out of range
  CHECK(EdgeColoring().class_count() == 0);
  CHECK(EdgeColoring(2, {0, 1, 0}).color(2) == 0);

  auto c = coloring_from_json(R"({"k": 2, "colors": [0, 1, 0]})");
  CHECK(c == EdgeColoring(2, {0, 1, 0}));
  CHECK(coloring_from_json(coloring_to_json(c)) == c);
  CHECK_THROWS_AS(coloring_from_json("{}"), Error);
  CHECK_THROWS_AS(coloring_from_json(R"({"k": 2, "colors": [0]})"), Error);
}

TEST_CASE("validate: spec examples") {
  // P3 with two singletons: each edge dominated by the other's class
  auto rep = validate(gen_path(3), EdgeColoring(2, {0, 1}));
  CHECK(rep.valid());
  CHECK(rep.dominating_color[0] == 1);
  CHECK(rep.dominating_color[1] == 0);

  // K2: proper but the lone edge has no adjacent edge
  rep = validate(gen_path(2), EdgeColoring(1, {0}));
  CHECK(rep.proper);
  CHECK(rep.failures == std::vector<int>{0});
  CHECK(!rep.valid());

  // P4 (0,0,1): edges 0,1 share vertex 1 and share a color
  rep = validate(gen_path(4), EdgeColoring(2, {0, 0, 1}));
  CHECK(!rep.proper);
  CHECK(rep.conflicts == std::vector<std::pair<int, int>>{{0, 1}});

  // P4 (0,1,2) and P5 (0,1,2,0) are valid
  CHECK(validate(gen_path(4), EdgeColoring(3, {0, 1, 2})).valid());
  CHECK(validate(gen_path(5), EdgeColoring(3, {0, 1, 2, 0})).valid());

  // C6 with three perfect matchings: proper, yet every class contains a
  // non-adjacent member for every edge
  rep = validate(gen_cycle(6), EdgeColoring(3, {0, 1, 2, 0, 1, 2}));
  CHECK(rep.proper);
  CHECK(rep.failures.size() == 6);

  // empty graph: vacuously valid with k = 0
  CHECK(validate(Graph(2, {}), EdgeColoring()).valid());

  CHECK_THROWS_AS(validate(gen_path(4), EdgeColoring(2, {0, 1})), Error);
}

TEST_CASE("dominating class never contains the edge itself") {
  for (int n : {4, 5, 8, 13, 21}) {
    Graph g = gen_path(n);
    auto w = construct_path_tdec(n);
    auto rep = validate(g, w);
    REQUIRE(rep.valid());
    for (int e = 0; e < g.edge_count(); ++e) {
      REQUIRE(rep.dominating_color[e].has_value());
      CHECK(w.color(e) != *rep.dominating_color[e]);
    }
  }
}

TEST_CASE("validate is invariant under consistent edge permutation") {
  std::mt19937 rng(20240817);
  for (const Graph& g : {gen_cycle(7), gen_wheel(6), gen_complete(5), gen_path(9)}) {
    int m = g.edge_count();
    // a valid coloring to permute: all distinct colors
    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    EdgeColoring base(m, identity);
    bool base_valid = validate(g, base).valid();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::pair<int, int>> edges(m);
      std::vector<int> colors(m);
      for (int e = 0; e < m; ++e) {
        edges[perm[e]] = g.edges()[e];
        colors[perm[e]] = base.color(e);
      }
      Graph shuffled(g.vertex_count(), edges);
      CHECK(validate(shuffled, EdgeColoring(m, colors)).valid() == base_valid);
    }
  }
}

TEST_CASE("normalize") {
  CHECK(normalize(EdgeColoring(3, {2, 0, 1})) == EdgeColoring(3, {0, 1, 2}));
  CHECK(normalize(EdgeColoring(2, {0, 1, 0})) == EdgeColoring(2, {0, 1, 0}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + trial % 9;
    // random surjective coloring: first-occurrence relabel of raw values
    std::vector<int> colors(m), map(m, -1);
    int next = 0;
    for (int& c : colors) {
      int raw = static_cast<int>(rng() % m);
      if (map[raw] < 0) map[raw] = next++;
      c = map[raw];
    }
    EdgeColoring packed(next, colors);
    CHECK(normalize(packed) == packed);  // already in first-occurrence order
    CHECK(normalize(normalize(packed)) == normalize(packed));
  }
}

TEST_CASE("construct_path_tdec matches the formula and validates") {
  CHECK_THROWS_AS(construct_path_tdec(2), Error);
  for (int n = 3; n <= 40; ++n) {
    auto w = construct_path_tdec(n);
    CHECK(w.class_count() == path_formula(n));
    CHECK(validate(gen_path(n), w).valid());
  }
  // n = 9 spelled out: 1,a,b,2,1,c,d,2 with a,b,c,d fresh
  CHECK(construct_path_tdec(9).colors() == std::vector<int>{0, 2, 3, 1, 0, 4, 5, 1});
  CHECK(construct_path_tdec(5).class_count() == 3);
  CHECK(construct_path_tdec(14).class_count() == 9);
}
