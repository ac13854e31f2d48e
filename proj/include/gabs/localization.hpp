#pragma once

#include "gabs/mult_set.hpp"
#include "gabs/submodule.hpp"

namespace gabs {

// Ring / module of fractions over a finite carrier.  Classes partition
// carrier x A under (m, a) ~ (m', a') iff b (a' m - a m') = 0 for some b in A;
// each class is represented by its canonically-least (numerator, denominator)
// pair and the induced structure is handed back as an op-table ring/module so
// every validator and predicate applies to it unchanged.
struct LocalizedRing {
  GradedRing::Ptr ring;
  std::vector<std::pair<Elem, Elem>> reps;                  // class id -> least pair
  std::vector<std::vector<std::pair<Elem, Elem>>> members;  // class id -> all pairs
  int class_of(const Elem& num, const Elem& den) const;
  bool is_unit(int cls) const;
};

struct LocalizedModule {
  GradedModule::Ptr module;
  LocalizedRing ring_part;
  std::vector<std::pair<Elem, Elem>> reps;
  std::vector<std::vector<std::pair<Elem, Elem>>> members;
  int class_of(const Elem& num, const Elem& den) const;
};

LocalizedRing localize_ring(GradedRing::Ptr r, const MultiplicativeSet& a);
LocalizedModule localize_module(GradedModule::Ptr m, const MultiplicativeSet& a);

// A^{-1}C inside the localized module: classes with a representative (c, a).
GradedSubmodule localize_submodule(const GradedSubmodule& c, const MultiplicativeSet& a,
                                   const LocalizedModule& lm);

}  // namespace gabs
