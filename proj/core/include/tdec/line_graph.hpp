#ifndef TDEC_LINE_GRAPH_HPP
#define TDEC_LINE_GRAPH_HPP

#include "tdec/graph.hpp"

namespace tdec {

/// L(G): vertex i is edge i of g, adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace tdec

#endif
