#ifndef TDEC_GRAPH_HPP
#define TDEC_GRAPH_HPP

#include <utility>
#include <vector>

#include "tdec/errors.hpp"

namespace tdec {

/// Immutable simple undirected graph. Vertices are 0..n-1; edges carry stable
/// ids 0..m-1 in construction order, endpoints stored with u < v.
class Graph {
public:
  struct Neighbor {
    int vertex;
    int edge;
  };

  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int e) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int v) const;
  int max_degree() const;
  bool has_edge(int u, int v) const;
  /// Edge id joining u and v, or -1.
  int edge_id(int u, int v) const;
  /// Incident edges of v as (neighbor, edge id), sorted by neighbor id.
  const std::vector<Neighbor>& neighbors(int v) const;

  /// Two edges are adjacent iff distinct and sharing an endpoint.
  bool edges_adjacent(int e, int f) const;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Neighbor>> adj_;
};

/// Validating constructor wrapper; rejects loops, duplicates and out-of-range
/// endpoints.
Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs);

}  // namespace tdec

#endif
