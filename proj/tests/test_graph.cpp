#include <doctest.h>

#include <set>

#include "tdec/families.hpp"
#include "tdec/formats.hpp"
#include "tdec/graph.hpp"
#include "tdec/structure.hpp"

using namespace tdec;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a tdec::Error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("graph construction and invariants") {
  Graph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.edge_count() == 2);
  CHECK(p3.edge(0) == std::pair{0, 1});
  CHECK(p3.edges_adjacent(0, 1));
  CHECK(!p3.edges_adjacent(0, 0));

  CHECK(kind_of([] { build_graph(4, {{0, 0}}); }) == ErrorKind::LoopEdge);
  CHECK(kind_of([] { build_graph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { build_graph(3, {{0, 3}}); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { build_graph(2, {{0, 1}}).edge(1); }) == ErrorKind::EdgeOutOfRange);

  // endpoints normalized to u < v, ids stable in input order
  Graph g = build_graph(4, {{3, 1}, {0, 2}});
  CHECK(g.edge(0) == std::pair{1, 3});
  CHECK(g.edge(1) == std::pair{0, 2});
  CHECK(g.edge_id(1, 3) == 0);
  CHECK(g.edge_id(0, 3) == -1);
}

TEST_CASE("family generators") {
  Graph p5 = gen_path(5);
  CHECK(p5.vertex_count() == 5);
  CHECK(p5.edge_count() == 4);
  int pendant = 0;
  for (int v = 0; v < 5; ++v)
    if (p5.degree(v) == 1) ++pendant;
  CHECK(pendant == 2);

  Graph f2 = gen_friendship(2);
  CHECK(f2.vertex_count() == 5);
  CHECK(f2.edge_count() == 6);
  CHECK(f2.degree(0) == 4);

  Graph w5 = gen_wheel(5);
  CHECK(w5.vertex_count() == 5);
  CHECK(w5.edge_count() == 8);
  CHECK(w5.max_degree() == 4);

  CHECK(gen_star(6).max_degree() == 6);
  CHECK(gen_complete(4).edge_count() == 6);
  CHECK(gen_complete_bipartite(3, 2).edge_count() == 6);

  CHECK(kind_of([] { gen_cycle(2); }) == ErrorKind::ParameterTooSmall);
  CHECK(kind_of([] { gen_wheel(3); }) == ErrorKind::ParameterTooSmall);
  CHECK(kind_of([] { gen_friendship(0); }) == ErrorKind::ParameterTooSmall);

  auto spec = parse_family_spec("complete-bipartite:3,2");
  CHECK(spec.family == Family::CompleteBipartite);
  CHECK(spec.a == 3);
  CHECK(spec.b == 2);
  CHECK(parse_family_spec("wheel:5").name() == "wheel:5");
  CHECK(kind_of([] { parse_family_spec("blob:3"); }) == ErrorKind::ParseError);
}

TEST_CASE("degrees and components") {
  CHECK(gen_star(6).max_degree() == 6);
  Graph c5 = gen_cycle(5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  // P3 + P3 disjoint union
  Graph two_paths = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  auto comps = connected_components(two_paths);
  CHECK(comps.count == 2);
  CHECK(comps.groups()[0] == std::vector<int>{0, 1, 2});
  CHECK(comps.groups()[1] == std::vector<int>{3, 4, 5});
  CHECK(!is_connected(two_paths));
  CHECK(is_connected(gen_cycle(4)));
  CHECK(connected_components(Graph(3, {})).count == 3);
}

TEST_CASE("labeled connected enumeration") {
  CHECK(labeled_connected_graphs(2).size() == 2);  // K1 and K2
  std::vector<int> per_n(7, 0);
  enumerate_labeled_connected_graphs(5, [&](const Graph& g) { ++per_n[g.vertex_count()]; });
  CHECK(per_n[1] == 1);
  CHECK(per_n[2] == 1);
  CHECK(per_n[3] == 4);
  CHECK(per_n[4] == 38);
  CHECK(per_n[5] == 728);

  // each labeled graph appears exactly once
  std::set<std::string> seen;
  enumerate_labeled_connected_graphs(4, [&](const Graph& g) {
    CHECK(seen.insert(serialize_edge_list(g)).second);
  });
  CHECK(seen.size() == 44);

  CHECK_THROWS_AS(labeled_connected_graphs(7), Error);
}
