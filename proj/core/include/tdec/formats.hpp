#ifndef TDEC_FORMATS_HPP
#define TDEC_FORMATS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tdec/graph.hpp"

namespace tdec {

/// Canonical edge-list format: "p <n> <m>" header, then m lines "e <u> <v>",
/// 0-based, LF newlines; lines starting with '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// Standard dense graph6, one graph per line (corpus ingestion).
std::vector<Graph> parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace tdec

#endif
