#include "tdec/surgery.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tdec {

VertexDeletion delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  VertexDeletion out;
  out.old_to_new.assign(g.vertex_count(), -1);
  int next = 0;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (w != v) out.old_to_new[w] = next++;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(out.old_to_new[a], out.old_to_new[b]);
  out.graph = Graph(g.vertex_count() - 1, std::move(edges));
  return out;
}

Graph delete_edge(const Graph& g, int e) {
  g.edge(e);  // range check
  std::vector<std::pair<int, int>> edges;
  for (int f = 0; f < g.edge_count(); ++f)
    if (f != e) edges.push_back(g.edges()[f]);
  return Graph(g.vertex_count(), std::move(edges));
}

EdgeContraction contract_edge(const Graph& g, int e) {
  auto [u, v] = g.edge(e);  // u < v
  EdgeContraction out;
  out.old_to_new.assign(g.vertex_count(), -1);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == v) out.old_to_new[w] = u;
    else out.old_to_new[w] = w < v ? w : w - 1;
  }
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (int f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    auto [a, b] = g.edges()[f];
    int na = out.old_to_new[a], nb = out.old_to_new[b];
    if (na == nb) continue;  // loop from a parallel edge
    if (na > nb) std::swap(na, nb);
    if (seen.insert({na, nb}).second) edges.emplace_back(na, nb);
  }
  out.graph = Graph(g.vertex_count() - 1, std::move(edges));
  return out;
}

SubdividedGraph subdivide(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidK, "subdivision needs k >= 1, got " + std::to_string(k));
  SubdividedGraph out;
  out.superedge.resize(g.edge_count());
  out.internal_vertices.resize(g.edge_count());
  if (k == 1) {
    out.graph = g;
    for (int e = 0; e < g.edge_count(); ++e) out.superedge[e] = {e};
    return out;
  }
  int next_vertex = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(g.edge_count()) * k);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    int prev = u;
    for (int l = 1; l < k; ++l) {
      out.internal_vertices[e].push_back(next_vertex);
      out.superedge[e].push_back(static_cast<int>(edges.size()));
      edges.emplace_back(std::min(prev, next_vertex), std::max(prev, next_vertex));
      prev = next_vertex++;
    }
    out.superedge[e].push_back(static_cast<int>(edges.size()));
    edges.emplace_back(std::min(prev, v), std::max(prev, v));
  }
  out.graph = Graph(next_vertex, std::move(edges));
  return out;
}

}  // namespace tdec
