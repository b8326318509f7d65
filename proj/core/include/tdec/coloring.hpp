#ifndef TDEC_COLORING_HPP
#define TDEC_COLORING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdec/graph.hpp"

namespace tdec {

/// Surjective assignment of edge ids to color classes 0..k-1. The empty
/// coloring (k = 0, no edges) is allowed and vacuously valid.
class EdgeColoring {
public:
  EdgeColoring() = default;
  EdgeColoring(int class_count, std::vector<int> colors);

  int class_count() const { return k_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int color(int e) const { return colors_.at(e); }
  const std::vector<int>& colors() const { return colors_; }

  bool operator==(const EdgeColoring& other) const = default;

private:
  int k_ = 0;
  std::vector<int> colors_;
};

/// Full validation certificate. valid() iff proper and every edge has a
/// dominating class (a nonempty class all of whose members are adjacent to
/// the edge; never the edge's own class, since edge adjacency is irreflexive).
struct TdeReport {
  bool proper = true;
  std::vector<std::pair<int, int>> conflicts;          // adjacent same-color pairs, e < f
  std::vector<std::optional<int>> dominating_color;    // per edge, lowest dominating class
  std::vector<int> failures;                           // edges with no dominating class
  bool valid() const { return proper && failures.empty(); }
};

TdeReport validate(const Graph& g, const EdgeColoring& c);

/// Relabels colors in first-occurrence order along edge ids; idempotent.
EdgeColoring normalize(const EdgeColoring& c);

/// Constructive witness over gen_path(n) with path_formula(n) classes:
/// stored small cases for n <= 8, the f0/f1/f2/f3 tail assignments beyond.
EdgeColoring construct_path_tdec(int n);

EdgeColoring coloring_from_json(std::string_view text);
std::string coloring_to_json(const EdgeColoring& c);
std::string tde_report_to_json(const TdeReport& report);

}  // namespace tdec

#endif
