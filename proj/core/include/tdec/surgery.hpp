#ifndef TDEC_SURGERY_HPP
#define TDEC_SURGERY_HPP

#include <vector>

#include "tdec/graph.hpp"

namespace tdec {

/// G - v. Remaining vertices are compacted preserving relative order;
/// old_to_new[v] == -1 for the removed vertex.
struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;
};
VertexDeletion delete_vertex(const Graph& g, int v);

/// G - e. Vertex ids unchanged; edge ids above e shift down by one.
Graph delete_edge(const Graph& g, int e);

/// G / e. Endpoints u < v merge into u's slot, vertices above v shift down;
/// loops dropped, parallel edges merged keeping the lowest original edge id.
struct EdgeContraction {
  Graph graph;
  std::vector<int> old_to_new;
};
EdgeContraction contract_edge(const Graph& g, int e);

/// G^{1/k}: every edge replaced by a path of k edges. Original vertices keep
/// their ids; internal vertices are appended in original edge order, walking
/// from the smaller endpoint. superedge[e] lists the k replacement edge ids in
/// walk order, so replacement edges of original edge e are e*k .. e*k+k-1.
struct SubdividedGraph {
  Graph graph;
  std::vector<std::vector<int>> superedge;
  std::vector<std::vector<int>> internal_vertices;
};
SubdividedGraph subdivide(const Graph& g, int k);

}  // namespace tdec

#endif
