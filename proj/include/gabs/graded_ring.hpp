#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gabs/components.hpp"
#include "gabs/core.hpp"
#include "gabs/outcome.hpp"

namespace gabs {

// Full operation tables over element indices 0..n-1; backend for structures
// that are not presented on a product-of-cyclics carrier (rings of fractions).
struct OpTables {
  std::vector<std::vector<int>> add;
  std::vector<int> neg;
  std::vector<std::vector<int>> mul;  // or the scalar action, for modules
  int zero = 0;
  int one = 0;
  std::vector<std::string> labels;
};

// G-graded commutative ring with exact arithmetic.  Built-in constructors
// cover Z_n, bounded Z, products of cyclics, group algebras and explicit
// structure-constant tables; arbitrary finite rings enter through op tables.
class GradedRing {
 public:
  using Ptr = std::shared_ptr<const GradedRing>;

  static Ptr modular(Coord n, GradingGroup g, GradingSpec spec = GradingSpec::trivial(),
                     Bound b = Bound());
  static Ptr integers(GradingGroup g, GradingSpec spec = GradingSpec::trivial(),
                      Bound b = Bound());
  static Ptr product(std::vector<Coord> orders, GradingGroup g,
                     GradingSpec spec = GradingSpec::trivial(), Bound b = Bound());
  // carrier = base^|G|, one coordinate per group element, e_g * e_h = e_{g+h}
  static Ptr group_algebra(Coord base, GradingGroup g, Bound b = Bound());
  // explicit products of the standard generators
  static Ptr structure_table(std::vector<Coord> orders, Elem one,
                             std::vector<std::vector<Elem>> gen_products, GradingGroup g,
                             GradingSpec spec, Bound b = Bound());
  static Ptr from_op_tables(OpTables t, GradingGroup g, ComponentMap comps, std::string desc,
                            Bound b = Bound());

  const CyclicProduct& shape() const { return shape_; }
  bool finite() const { return shape_.finite(); }
  Bound bound() const { return bound_; }
  const GradingGroup& grading_group() const { return group_; }
  bool table_backed() const { return tables_.has_value(); }

  Elem zero() const { return shape_.zero(); }
  const Elem& one() const { return one_; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const { return shape_.is_zero(a); }
  bool is_one(const Elem& a) const { return a == one_; }
  bool in_box(const Elem& a) const { return shape_.in_box(a, bound_); }
  bool less(const Elem& a, const Elem& b) const { return shape_.less(a, b); }

  std::vector<Elem> elements() const { return shape_.enumerate(bound_); }
  const ComponentMap& components() const { return components_; }
  const CompSet* component(const Degree& d) const;
  Mem component_contains(const Degree& d, const Elem& x) const;
  const std::vector<Elem>& homogeneous_elements() const { return homogeneous_; }
  bool is_homogeneous(const Elem& x) const;
  std::optional<Degree> degree_of(const Elem& x) const;

  // Unit group; exact for finite carriers and for the diagonal built-ins
  // (integers / product), where units must have all coordinates in {-1, 0, 1}.
  std::vector<Elem> units(bool& exact) const;

  std::string show(const Elem& a) const;
  const std::string& describe() const { return desc_; }

 private:
  GradedRing() = default;
  static Ptr make_bilinear(std::vector<Coord> orders, Elem one,
                           std::vector<std::vector<Elem>> gen_products, GradingGroup g,
                           GradingSpec spec, Bound b, std::string desc, bool diagonal);
  void finish();

  CyclicProduct shape_;
  GradingGroup group_;
  Bound bound_;
  Elem one_;
  std::vector<std::vector<Elem>> gen_products_;  // bilinear backend
  bool diagonal_ = false;
  std::optional<OpTables> tables_;               // table backend
  ComponentMap components_;
  std::vector<Elem> homogeneous_;
  std::string desc_;
};

// Holds iff the grading axioms and ring axioms pass (exhaustively on finite
// carriers, on the enumeration box otherwise); Fails carries the first
// violation in canonical order.
CheckOutcome validate_graded_ring(const GradedRing& r);

}  // namespace gabs
