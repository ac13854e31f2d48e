#include "gabs/mult_set.hpp"

#include <algorithm>
#include <set>

namespace gabs {

MultiplicativeSet MultiplicativeSet::trusted(GradedRing::Ptr ring, std::vector<Elem> elems,
                                             bool exact) {
  MultiplicativeSet s;
  std::sort(elems.begin(), elems.end(),
            [&](const Elem& a, const Elem& b) { return ring->less(a, b); });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.elems_ = std::move(elems);
  s.exact_ = exact;
  s.contains_zero_ = std::any_of(s.elems_.begin(), s.elems_.end(),
                                 [&](const Elem& x) { return ring->is_zero(x); });
  s.ring_ = std::move(ring);
  return s;
}

MultiplicativeSet MultiplicativeSet::closure(GradedRing::Ptr ring, const std::vector<Elem>& gens) {
  auto less = [&](const Elem& a, const Elem& b) { return ring->less(a, b); };
  std::set<Elem, decltype(less)> out(less);
  out.insert(ring->one());
  std::vector<Elem> work;
  bool truncated = false;
  for (Elem g : gens) {
    g = ring->shape().reduce(g);
    if (!ring->is_homogeneous(g))
      throw std::invalid_argument("multiplicative set generators must be homogeneous");
    if (!ring->in_box(g)) {
      truncated = true;
      continue;
    }
    if (out.insert(g).second) work.push_back(g);
  }
  while (!work.empty()) {
    Elem x = std::move(work.back());
    work.pop_back();
    std::vector<Elem> snapshot(out.begin(), out.end());
    for (const Elem& y : snapshot) {
      Elem p = ring->mul(x, y);
      if (!ring->in_box(p)) {
        truncated = true;
        continue;
      }
      if (out.insert(p).second) work.push_back(p);
    }
  }
  return trusted(std::move(ring), {out.begin(), out.end()}, !truncated);
}

MultiplicativeSet MultiplicativeSet::units(GradedRing::Ptr ring) {
  bool exact = false;
  std::vector<Elem> u = ring->units(exact);
  return trusted(std::move(ring), std::move(u), exact);
}

MultiplicativeSet MultiplicativeSet::nonzero_integers(GradedRing::Ptr ring) {
  if (ring->finite() || ring->shape().rank() != 1)
    throw structural_error("nonzero_integers needs the integer ring");
  std::vector<Elem> out;
  for (const Elem& x : ring->elements())
    if (!ring->is_zero(x)) out.push_back(x);
  return trusted(std::move(ring), std::move(out), false);
}

bool MultiplicativeSet::contains(const Elem& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x,
                            [&](const Elem& a, const Elem& b) { return ring_->less(a, b); });
}

bool MultiplicativeSet::subset_of(const MultiplicativeSet& other) const {
  return std::all_of(elems_.begin(), elems_.end(),
                     [&](const Elem& x) { return other.contains(x); });
}

std::string MultiplicativeSet::show() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ",";
    s += ring_->show(elems_[i]);
  }
  return s + "}";
}

MultiplicativeSet saturate(const MultiplicativeSet& a) {
  const GradedRing::Ptr& ring = a.ring();
  const std::vector<Elem>& h = ring->homogeneous_elements();
  std::vector<Elem> out;
  for (const Elem& cand : h) {
    bool in = false;
    for (const Elem& t : h) {
      Elem at = ring->mul(cand, t);
      for (const Elem& b : a.elements()) {
        Elem lhs = ring->mul(b, at);
        for (const Elem& u : a.elements())
          if (lhs == ring->mul(b, u)) {
            in = true;
            break;
          }
        if (in) break;
      }
      if (in) break;
    }
    if (in) out.push_back(cand);
  }
  bool exact = ring->finite() && a.exact();
  return MultiplicativeSet::trusted(ring, std::move(out), exact);
}

}  // namespace gabs
