#include "tdec/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tdec {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorKind::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::PathTooShort: return "PathTooShort";
    case ErrorKind::CycleTooShort: return "CycleTooShort";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
    case ErrorKind::InfeasibleGraph: return "InfeasibleGraph";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_pairs) {
  if (vertex_count < 0)
    throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
  n_ = vertex_count;
  edges_.reserve(edge_pairs.size());
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edge_pairs) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                      std::to_string(n_));
    if (u == v)
      throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw Error(ErrorKind::DuplicateEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
    edges_.emplace_back(u, v);
  }
  adj_.assign(n_, {});
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    adj_[u].push_back({v, e});
    adj_[v].push_back({u, e});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " with n=" +
                                                 std::to_string(n_));
}

std::pair<int, int> Graph::edge(int e) const {
  if (e < 0 || e >= edge_count())
    throw Error(ErrorKind::EdgeOutOfRange, "edge id " + std::to_string(e) + " with m=" +
                                               std::to_string(edge_count()));
  return edges_[e];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

int Graph::edge_id(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, int b) { return a.vertex < b; });
  if (it != list.end() && it->vertex == v) return it->edge;
  return -1;
}

const std::vector<Graph::Neighbor>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::edges_adjacent(int e, int f) const {
  if (e == f) return false;
  auto [a, b] = edge(e);
  auto [c, d] = edge(f);
  return a == c || a == d || b == c || b == d;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs) {
  return Graph(vertex_count, edge_pairs);
}

}  // namespace tdec
