#include "tdec/line_graph.hpp"

namespace tdec {

Graph line_graph(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  // Two distinct edges of a simple graph share at most one vertex, so each
  // line-graph edge is generated exactly once.
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.neighbors(v);
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        edges.emplace_back(std::min(inc[i].edge, inc[j].edge),
                           std::max(inc[i].edge, inc[j].edge));
  }
  return Graph(g.edge_count(), std::move(edges));
}

}  // namespace tdec
