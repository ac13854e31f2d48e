#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gabs/graded_ring.hpp"

namespace gabs {

// Graded module over a GradedRing.  The scalar action is one of: the ring
// multiplication itself (ring_as_module), coordinatewise integer scaling
// (cyclic_product over Z or Z_n), an explicit bilinear generator table, or
// full op tables (modules of fractions).
class GradedModule {
 public:
  using Ptr = std::shared_ptr<const GradedModule>;

  static Ptr ring_as_module(GradedRing::Ptr ring);
  static Ptr cyclic_product(GradedRing::Ptr ring, std::vector<Coord> orders, GradingSpec spec);
  static Ptr action_table(GradedRing::Ptr ring, std::vector<Coord> orders,
                          std::vector<std::vector<Elem>> gen_action, GradingSpec spec);
  static Ptr from_op_tables(GradedRing::Ptr ring, OpTables t, ComponentMap comps,
                            std::string desc);

  const GradedRing::Ptr& ring() const { return ring_; }
  const CyclicProduct& shape() const { return shape_; }
  bool finite() const { return shape_.finite(); }
  Bound bound() const { return ring_->bound(); }
  bool is_ring_module() const { return kind_ == Kind::ring_mult; }
  bool table_backed() const { return kind_ == Kind::op_table; }

  Elem zero() const { return shape_.zero(); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const;
  Elem scale_int(Coord k, const Elem& a) const;
  Elem act(const Elem& r, const Elem& m) const;
  bool is_zero(const Elem& a) const { return shape_.is_zero(a); }
  bool in_box(const Elem& a) const { return shape_.in_box(a, bound()); }
  bool less(const Elem& a, const Elem& b) const { return shape_.less(a, b); }

  std::vector<Elem> elements() const { return shape_.enumerate(bound()); }
  const ComponentMap& components() const { return components_; }
  const CompSet* component(const Degree& d) const;
  Mem component_contains(const Degree& d, const Elem& x) const;
  const std::vector<Elem>& homogeneous_elements() const { return homogeneous_; }
  bool is_homogeneous(const Elem& x) const;
  std::optional<Degree> degree_of(const Elem& x) const;

  // complete generating set of the carrier (standard generators, or every
  // element for table-backed modules)
  const std::vector<Elem>& generating_elements() const { return generators_; }

  std::string show(const Elem& a) const;
  const std::string& describe() const { return desc_; }

 private:
  enum class Kind { ring_mult, integer_like, bilinear, op_table };
  GradedModule() = default;
  void finish();

  GradedRing::Ptr ring_;
  CyclicProduct shape_;
  Kind kind_ = Kind::ring_mult;
  std::vector<std::vector<Elem>> gen_action_;  // bilinear backend
  std::optional<OpTables> tables_;             // op-table backend (mul = action by ring index)
  ComponentMap components_;
  std::vector<Elem> homogeneous_;
  std::vector<Elem> generators_;
  std::string desc_;
};

// True when quantifying homogeneous scalars over the enumeration box provably
// covers all of h(R): the ring is finite, or the module is finite and every
// bilinear action of the integer-like ring factors through the module
// exponent, which the box covers.
bool scalar_box_complete(const GradedModule& m);

// lcm of the finite coordinate orders (the additive exponent when finite)
Coord carrier_exponent(const CyclicProduct& shape);

CheckOutcome validate_graded_module(const GradedModule& m);

// The unique decomposition of x into nonzero homogeneous parts, keyed by
// degree.  Requires a validated module.
std::map<Degree, Elem> homogeneous_components(const Elem& x, const GradedModule& m);

}  // namespace gabs
