#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gabs/graded_ring.hpp"

namespace gabs {

// Multiplicatively closed set of homogeneous elements; 1 is always a member.
// In bounded mode the closure is truncated at the box and flagged inexact.
// A closure that reaches 0 (nilpotent generators) is allowed but flagged.
class MultiplicativeSet {
 public:
  MultiplicativeSet() = default;

  static MultiplicativeSet closure(GradedRing::Ptr ring, const std::vector<Elem>& gens);
  static MultiplicativeSet units(GradedRing::Ptr ring);
  // Z \ {0}, truncated at the box; integer-like rings only.
  static MultiplicativeSet nonzero_integers(GradedRing::Ptr ring);
  static MultiplicativeSet trusted(GradedRing::Ptr ring, std::vector<Elem> elems, bool exact);

  const GradedRing::Ptr& ring() const { return ring_; }
  const std::vector<Elem>& elements() const { return elems_; }
  bool exact() const { return exact_; }
  bool contains_zero() const { return contains_zero_; }
  bool contains(const Elem& x) const;
  bool subset_of(const MultiplicativeSet& other) const;
  std::string show() const;

 private:
  GradedRing::Ptr ring_;
  std::vector<Elem> elems_;
  bool exact_ = true;
  bool contains_zero_ = false;
};

// A* = { a in h(R) : some b, u in A and t in h(R) give b a t = b u }, i.e. the
// homogeneous elements whose image a/1 is a unit in the ring of fractions.
MultiplicativeSet saturate(const MultiplicativeSet& a);

}  // namespace gabs
