#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace gabs {

using Coord = long long;

// Element of a product-of-cyclics carrier, one entry per factor.  The same
// representation carries degrees of the grading group.
using Elem = std::vector<Coord>;
using Degree = Elem;

// Box limit applied to coordinates that live in an infinite cyclic factor.
struct Bound {
  int value = 10;
  Bound() = default;
  explicit Bound(int b) : value(b) {
    if (b < 1) throw std::invalid_argument("enumeration bound must be >= 1");
  }
};

// Mismatched carriers, mixed parents, malformed tables.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tri-state membership: `unknown` marks queries a box-truncated set cannot
// decide (element outside the box of a truncated set).
enum class Mem { yes, no, unknown };

// Z_{d1} x ... x Z_{dk}; order 0 marks an infinite factor (Z).
class CyclicProduct {
 public:
  CyclicProduct() = default;
  explicit CyclicProduct(std::vector<Coord> orders);

  std::size_t rank() const { return orders_.size(); }
  const std::vector<Coord>& orders() const { return orders_; }
  bool finite() const { return finite_; }
  long long size() const;  // only when finite

  Elem zero() const { return Elem(orders_.size(), 0); }
  Elem unit(std::size_t i) const;
  Elem reduce(Elem x) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(Coord k, const Elem& a) const;

  bool is_zero(const Elem& a) const;
  // Only infinite coordinates are box-limited.
  bool in_box(const Elem& a, Bound b) const;

  // Canonical total order: per coordinate, finite factors by value and
  // infinite factors by (|v|, + before -); lexicographic across coordinates.
  std::strong_ordering compare(const Elem& a, const Elem& b) const;
  bool less(const Elem& a, const Elem& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  // All elements when finite, otherwise the box [-B, B] on infinite
  // coordinates; sorted by the canonical order.
  std::vector<Elem> enumerate(Bound b) const;

  std::string show(const Elem& a) const;
  std::string describe() const;

  bool operator==(const CyclicProduct&) const = default;

 private:
  void check(const Elem& a) const;
  std::vector<Coord> orders_;
  bool finite_ = true;
};

// The abelian grading group G: finite factor orders must be >= 2.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<Coord> orders);

  const CyclicProduct& carrier() const { return g_; }
  Degree identity() const { return g_.zero(); }
  Degree combine(const Degree& a, const Degree& b) const { return g_.add(a, b); }
  Degree invert(const Degree& a) const { return g_.neg(a); }
  Degree reduce(Degree d) const { return g_.reduce(std::move(d)); }
  bool finite() const { return g_.finite(); }
  std::vector<Degree> enumerate(Bound b) const { return g_.enumerate(b); }
  std::string show(const Degree& d) const { return g_.show(d); }

  bool operator==(const GradingGroup&) const = default;

 private:
  CyclicProduct g_;
};

std::string show_coords(const Elem& a);

}  // namespace gabs
