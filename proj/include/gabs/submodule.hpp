#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gabs/graded_module.hpp"

namespace gabs {

// Validated graded submodule, stored as its (box-restricted) element set in
// canonical order plus the per-degree gradedness certificate C_h = C & M_h.
// `exact` marks sets that are provably the whole submodule rather than a box
// truncation.
class GradedSubmodule {
 public:
  GradedSubmodule() = default;

  // throws structural_error when the set is not closed, or not graded
  static GradedSubmodule from_elements(GradedModule::Ptr m, std::vector<Elem> elems);
  static GradedSubmodule zero(GradedModule::Ptr m);
  static GradedSubmodule whole(GradedModule::Ptr m);
  // already closed and graded (computed sets); only the certificate is built
  static GradedSubmodule trusted(GradedModule::Ptr m, std::vector<Elem> elems, bool exact);

  const GradedModule::Ptr& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elems_; }
  bool exact() const { return exact_; }
  std::size_t size() const { return elems_.size(); }

  Mem contains(const Elem& x) const;
  const std::vector<std::pair<Degree, std::vector<Elem>>>& components() const {
    return components_;
  }
  std::vector<Elem> component(const Degree& d) const;

  bool is_proper() const;  // C != M on the box
  bool same_set(const GradedSubmodule& other) const { return elems_ == other.elems_; }
  std::string show() const;

 private:
  GradedModule::Ptr parent_;
  std::vector<Elem> elems_;
  bool exact_ = true;
  std::vector<std::pair<Degree, std::vector<Elem>>> components_;
  void build_certificate();
};

// Holds iff every element's homogeneous parts stay inside the candidate set;
// the candidate must already be closed under + and the ring action (else a
// structural_error).  Fails carries an element together with the escaping part.
CheckOutcome is_graded_submodule(const GradedModule& m, const std::vector<Elem>& candidate);

// Smallest submodule containing the homogeneous generators (box-restricted
// closure in bounded mode).
GradedSubmodule generate_submodule(GradedModule::Ptr m, const std::vector<Elem>& gens);

GradedSubmodule intersect(const GradedSubmodule& a, const GradedSubmodule& b);

// Semantic membership r in (C :_R M), evaluated through the action on a
// generating set; exact whenever C is exact.
Mem colon_ring_contains(const GradedSubmodule& c, const Elem& r);

// (C :_R M) as a graded ideal, i.e. a submodule of ring_as_module(R).
GradedSubmodule colon_ring(const GradedSubmodule& c, GradedModule::Ptr ring_module);
GradedSubmodule colon_ring(const GradedSubmodule& c);

// (C :_M x) and (C :_M I)
GradedSubmodule colon_module(const GradedSubmodule& c, const Elem& divisor);
GradedSubmodule colon_module(const GradedSubmodule& c, const GradedSubmodule& ideal);

std::vector<Elem> ideal_component(const GradedSubmodule& ideal, const Degree& g);

// Closure of `seed` under +, - and the boxed ring action.
std::vector<Elem> module_closure(const GradedModule& m, const std::vector<Elem>& seed,
                                 bool& truncated);

// All graded submodules of a finite module, ordered by (size, elements).
std::vector<GradedSubmodule> enumerate_graded_submodules(GradedModule::Ptr m);

}  // namespace gabs
