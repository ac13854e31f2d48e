#pragma once

#include <optional>
#include <vector>

#include "gabs/core.hpp"

namespace gabs {

// One grading component: either a coordinate span (membership decidable for
// every element) or an explicit element list that may be box-truncated.
struct CompSet {
  std::optional<std::vector<char>> span;  // size = carrier rank when present
  std::vector<Elem> box_list;             // canonical order
  bool list_complete = true;

  Mem contains(const CyclicProduct& shape, const Elem& x, Bound b) const;
  bool all_zero() const;
};

// How component subgroups are declared on a carrier.
struct GradingSpec {
  enum class Kind { trivial, by_coordinate, by_generators };
  Kind kind = Kind::trivial;
  std::vector<Degree> coordinate_degrees;  // one per carrier coordinate
  std::vector<std::pair<Degree, std::vector<Elem>>> generators;

  static GradingSpec trivial() { return {}; }
  static GradingSpec by_coordinate(std::vector<Degree> degs) {
    GradingSpec s;
    s.kind = Kind::by_coordinate;
    s.coordinate_degrees = std::move(degs);
    return s;
  }
  static GradingSpec by_generators(std::vector<std::pair<Degree, std::vector<Elem>>> g) {
    GradingSpec s;
    s.kind = Kind::by_generators;
    s.generators = std::move(g);
    return s;
  }
};

using ComponentMap = std::vector<std::pair<Degree, CompSet>>;

// Closure of `seed` under + and - inside the box; `truncated` reports drops.
std::vector<Elem> additive_closure(const CyclicProduct& shape, const std::vector<Elem>& seed,
                                   Bound b, bool& truncated);

// Materialize a GradingSpec into per-degree component sets (sorted by degree).
ComponentMap materialize_grading(const CyclicProduct& shape, const GradingGroup& group,
                                 const GradingSpec& spec, Bound b);

// Number of ways (saturating at 2) to write x as a sum of one part per
// component.  When the count is 1 and `out` is given, the nonzero parts are
// stored there.  `flagged` is raised when a truncated component list may have
// hidden parts.
int count_decompositions(const CyclicProduct& shape, const ComponentMap& comps, const Elem& x,
                         Bound b, bool& flagged, std::vector<std::pair<Degree, Elem>>* out);

}  // namespace gabs
