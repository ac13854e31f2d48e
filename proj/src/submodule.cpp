#include "gabs/submodule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gabs {

namespace {

std::vector<Elem> sorted_unique(const GradedModule& m, std::vector<Elem> v) {
  std::sort(v.begin(), v.end(), [&](const Elem& a, const Elem& b) { return m.less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// A box set with all elements supported on finite coordinates is a genuine
// finite subgroup provided nothing escaped the box and the boxed scalars
// cover a full residue system of the module exponent.
bool set_is_exact(const GradedModule& m, const std::vector<Elem>& set, bool truncated) {
  if (m.finite()) return true;
  if (truncated) return false;
  for (const Elem& x : set)
    for (std::size_t i = 0; i < m.shape().rank(); ++i)
      if (m.shape().orders()[i] == 0 && x[i] != 0) return false;
  if (m.ring()->finite()) return true;
  Coord period = carrier_exponent(m.shape());
  return 2LL * m.bound().value + 1 >= period;
}

}  // namespace

void GradedSubmodule::build_certificate() {
  components_.clear();
  for (const auto& [d, cs] : parent_->components()) {
    std::vector<Elem> inter;
    for (const Elem& x : elems_)
      if (cs.contains(parent_->shape(), x, parent_->bound()) == Mem::yes) inter.push_back(x);
    components_.emplace_back(d, std::move(inter));
  }
}

Mem GradedSubmodule::contains(const Elem& x) const {
  bool found = std::binary_search(
      elems_.begin(), elems_.end(), x,
      [&](const Elem& a, const Elem& b) { return parent_->less(a, b); });
  if (found) return Mem::yes;
  if (exact_) return Mem::no;
  return parent_->in_box(x) ? Mem::no : Mem::unknown;
}

std::vector<Elem> GradedSubmodule::component(const Degree& d) const {
  Degree key = parent_->ring()->grading_group().reduce(d);
  for (const auto& [deg, comp] : components_)
    if (deg == key) return comp;
  return {parent_->zero()};
}

bool GradedSubmodule::is_proper() const {
  for (const Elem& x : parent_->elements())
    if (contains(x) != Mem::yes) return true;
  return false;
}

std::string GradedSubmodule::show() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ",";
    s += parent_->show(elems_[i]);
  }
  return s + "}";
}

GradedSubmodule GradedSubmodule::trusted(GradedModule::Ptr m, std::vector<Elem> elems,
                                         bool exact) {
  GradedSubmodule s;
  s.elems_ = sorted_unique(*m, std::move(elems));
  s.exact_ = exact;
  s.parent_ = std::move(m);
  s.build_certificate();
  return s;
}

GradedSubmodule GradedSubmodule::zero(GradedModule::Ptr m) {
  Elem z = m->zero();
  return trusted(std::move(m), {z}, true);
}

GradedSubmodule GradedSubmodule::whole(GradedModule::Ptr m) {
  std::vector<Elem> all = m->elements();
  bool exact = m->finite();
  return trusted(std::move(m), std::move(all), exact);
}

GradedSubmodule GradedSubmodule::from_elements(GradedModule::Ptr m, std::vector<Elem> elems) {
  for (Elem& x : elems) x = m->shape().reduce(x);
  std::vector<Elem> set = sorted_unique(*m, std::move(elems));
  auto found = [&](const Elem& x) {
    return std::binary_search(set.begin(), set.end(), x,
                              [&](const Elem& a, const Elem& b) { return m->less(a, b); });
  };
  if (!found(m->zero())) throw structural_error("submodule must contain 0");
  bool escaped = false;
  for (const Elem& x : set) {
    if (!found(m->neg(x))) throw structural_error("set not closed under negation");
    for (const Elem& y : set) {
      Elem s = m->add(x, y);
      if (!m->in_box(s)) {
        escaped = true;
        continue;
      }
      if (!found(s)) throw structural_error("set not closed under addition");
    }
  }
  for (const Elem& r : m->ring()->elements())
    for (const Elem& x : set) {
      Elem a = m->act(r, x);
      if (!m->in_box(a)) {
        escaped = true;
        continue;
      }
      if (!found(a)) throw structural_error("set not closed under the ring action");
    }
  CheckOutcome graded = is_graded_submodule(*m, set);
  if (graded.verdict == Verdict::fails)
    throw structural_error("set is not a graded submodule: a homogeneous part escapes");
  bool exact = set_is_exact(*m, set, escaped);
  return trusted(std::move(m), std::move(set), exact);
}

CheckOutcome is_graded_submodule(const GradedModule& m, const std::vector<Elem>& candidate) {
  bool flagged = !m.finite();
  for (const Elem& x : candidate) {
    bool dec_flag = false;
    std::vector<std::pair<Degree, Elem>> parts;
    int n = count_decompositions(m.shape(), m.components(), x, m.bound(), dec_flag, &parts);
    if (n != 1) {
      if (dec_flag) {
        flagged = true;
        continue;
      }
      CheckOutcome o = CheckOutcome::fail({{"element", x}});
      o.reason = "not_decomposable";
      return o;
    }
    for (const auto& [d, p] : parts) {
      bool in = std::binary_search(candidate.begin(), candidate.end(), p,
                                   [&](const Elem& a, const Elem& b) { return m.less(a, b); });
      if (!in) return CheckOutcome::fail({{"element", x}, {"part", p}});
    }
  }
  return CheckOutcome::pass(flagged, m.bound());
}

std::vector<Elem> module_closure(const GradedModule& m, const std::vector<Elem>& seed,
                                 bool& truncated) {
  auto less = [&](const Elem& a, const Elem& b) { return m.less(a, b); };
  std::set<Elem, decltype(less)> out(less);
  out.insert(m.zero());
  std::vector<Elem> work;
  std::vector<Elem> scalars = m.ring()->elements();
  auto push = [&](Elem x) {
    if (!m.in_box(x)) {
      truncated = true;
      return;
    }
    if (out.insert(x).second) work.push_back(std::move(x));
  };
  for (const Elem& x : seed) push(m.shape().reduce(x));
  while (!work.empty()) {
    Elem x = std::move(work.back());
    work.pop_back();
    push(m.neg(x));
    for (const Elem& r : scalars) push(m.act(r, x));
    std::vector<Elem> snapshot(out.begin(), out.end());
    for (const Elem& y : snapshot) push(m.add(x, y));
  }
  return {out.begin(), out.end()};
}

GradedSubmodule generate_submodule(GradedModule::Ptr m, const std::vector<Elem>& gens) {
  for (const Elem& g : gens)
    if (!m->is_homogeneous(m->shape().reduce(g)))
      throw std::invalid_argument("submodule generators must be homogeneous");
  bool truncated = false;
  std::vector<Elem> set = module_closure(*m, gens, truncated);
  bool exact = set_is_exact(*m, set, truncated);
  return GradedSubmodule::trusted(std::move(m), std::move(set), exact);
}

GradedSubmodule intersect(const GradedSubmodule& a, const GradedSubmodule& b) {
  if (a.parent() != b.parent() && a.parent()->describe() != b.parent()->describe())
    throw structural_error("intersection needs submodules of the same module");
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out),
                        [&](const Elem& x, const Elem& y) { return a.parent()->less(x, y); });
  return GradedSubmodule::trusted(a.parent(), std::move(out), a.exact() && b.exact());
}

Mem colon_ring_contains(const GradedSubmodule& c, const Elem& r) {
  const GradedModule& m = *c.parent();
  bool unknown = false;
  for (const Elem& gen : m.generating_elements()) {
    Mem mem = c.contains(m.act(r, gen));
    if (mem == Mem::no) return Mem::no;
    if (mem == Mem::unknown) unknown = true;
  }
  return unknown ? Mem::unknown : Mem::yes;
}

GradedSubmodule colon_ring(const GradedSubmodule& c, GradedModule::Ptr ring_module) {
  const GradedRing& r = *c.parent()->ring();
  std::vector<Elem> out;
  for (const Elem& x : r.elements())
    if (colon_ring_contains(c, x) == Mem::yes) out.push_back(x);
  bool exact = r.finite() && c.exact();
  return GradedSubmodule::trusted(std::move(ring_module), std::move(out), exact);
}

GradedSubmodule colon_ring(const GradedSubmodule& c) {
  return colon_ring(c, GradedModule::ring_as_module(c.parent()->ring()));
}

GradedSubmodule colon_module(const GradedSubmodule& c, const Elem& divisor) {
  const GradedModule& m = *c.parent();
  std::vector<Elem> out;
  bool flagged = false;
  for (const Elem& x : m.elements()) {
    Mem mem = c.contains(m.act(divisor, x));
    if (mem == Mem::yes) out.push_back(x);
    if (mem == Mem::unknown) flagged = true;
  }
  bool exact = m.finite() && c.exact() && !flagged;
  return GradedSubmodule::trusted(c.parent(), std::move(out), exact);
}

GradedSubmodule colon_module(const GradedSubmodule& c, const GradedSubmodule& ideal) {
  const GradedModule& m = *c.parent();
  std::vector<Elem> out;
  bool flagged = false;
  for (const Elem& x : m.elements()) {
    bool all = true;
    for (const Elem& r : ideal.elements()) {
      Mem mem = c.contains(m.act(r, x));
      if (mem == Mem::unknown) flagged = true;
      if (mem != Mem::yes) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(x);
  }
  bool exact = m.finite() && c.exact() && ideal.exact() && !flagged;
  return GradedSubmodule::trusted(c.parent(), std::move(out), exact);
}

std::vector<Elem> ideal_component(const GradedSubmodule& ideal, const Degree& g) {
  return ideal.component(g);
}

std::vector<GradedSubmodule> enumerate_graded_submodules(GradedModule::Ptr m) {
  if (!m->finite()) throw structural_error("submodule enumeration needs a finite module");
  auto less = [&](const Elem& a, const Elem& b) { return m->less(a, b); };
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue;
  bool trunc = false;
  std::vector<Elem> zero = module_closure(*m, {}, trunc);
  seen.insert(zero);
  queue.push_back(zero);
  const std::vector<Elem>& h = m->homogeneous_elements();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<Elem> base = queue[i];
    for (const Elem& x : h) {
      if (std::binary_search(base.begin(), base.end(), x, less)) continue;
      std::vector<Elem> seed = base;
      seed.push_back(x);
      std::vector<Elem> closed = module_closure(*m, seed, trunc);
      if (seen.insert(closed).second) queue.push_back(closed);
    }
  }
  std::sort(queue.begin(), queue.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](const Elem& x, const Elem& y) { return less(x, y); });
  });
  std::vector<GradedSubmodule> out;
  out.reserve(queue.size());
  for (auto& s : queue) out.push_back(GradedSubmodule::trusted(m, std::move(s), true));
  return out;
}

}  // namespace gabs
