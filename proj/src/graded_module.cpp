#include "gabs/graded_module.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gabs {

void GradedModule::finish() {
  auto less = [&](const Elem& a, const Elem& b) { return shape_.less(a, b); };
  std::set<Elem, decltype(less)> h(less);
  for (const auto& [d, cs] : components_)
    for (const Elem& x : cs.box_list) h.insert(x);
  homogeneous_.assign(h.begin(), h.end());
  if (kind_ == Kind::op_table) {
    generators_ = elements();
  } else {
    for (std::size_t i = 0; i < shape_.rank(); ++i) generators_.push_back(shape_.unit(i));
  }
}

GradedModule::Ptr GradedModule::ring_as_module(GradedRing::Ptr ring) {
  auto m = std::shared_ptr<GradedModule>(new GradedModule());
  m->shape_ = ring->shape();
  m->kind_ = ring->table_backed() ? Kind::op_table : Kind::ring_mult;
  m->components_ = ring->components();
  m->desc_ = ring->describe() + " as module";
  m->ring_ = std::move(ring);
  if (m->kind_ == Kind::op_table) {
    // reuse the ring tables; action = ring multiplication by index
    OpTables t;
    m->tables_ = t;  // tables looked up through the ring in act()
  }
  m->finish();
  return m;
}

GradedModule::Ptr GradedModule::cyclic_product(GradedRing::Ptr ring, std::vector<Coord> orders,
                                               GradingSpec spec) {
  if (ring->table_backed() || ring->shape().rank() != 1)
    throw structural_error("integer-like action needs a rank-1 scalar ring (Z or Z_n)");
  Coord n = ring->shape().orders()[0];
  for (Coord d : orders) {
    if (d < 0) throw structural_error("module coordinate order must be >= 0");
    if (n > 0 && (d == 0 || n % d != 0))
      throw structural_error("action of Z_" + std::to_string(n) +
                             " is ill-defined on a coordinate of order " + std::to_string(d));
  }
  auto m = std::shared_ptr<GradedModule>(new GradedModule());
  m->shape_ = CyclicProduct(std::move(orders));
  m->kind_ = Kind::integer_like;
  m->components_ = materialize_grading(m->shape_, ring->grading_group(), spec, ring->bound());
  m->desc_ = m->shape_.describe() + " over " + ring->describe();
  m->ring_ = std::move(ring);
  m->finish();
  return m;
}

GradedModule::Ptr GradedModule::action_table(GradedRing::Ptr ring, std::vector<Coord> orders,
                                             std::vector<std::vector<Elem>> gen_action,
                                             GradingSpec spec) {
  if (ring->table_backed()) throw structural_error("action table needs a coordinate ring");
  auto m = std::shared_ptr<GradedModule>(new GradedModule());
  m->shape_ = CyclicProduct(std::move(orders));
  const CyclicProduct& rs = ring->shape();
  if (gen_action.size() != rs.rank())
    throw structural_error("action table must cover every ring generator");
  for (std::size_t i = 0; i < gen_action.size(); ++i) {
    if (gen_action[i].size() != m->shape_.rank())
      throw structural_error("action table must cover every module generator");
    for (std::size_t j = 0; j < gen_action[i].size(); ++j) {
      gen_action[i][j] = m->shape_.reduce(gen_action[i][j]);
      Coord dr = rs.orders()[i], dm = m->shape_.orders()[j];
      if (dr > 0 && !m->shape_.is_zero(m->shape_.scale(dr, gen_action[i][j])))
        throw structural_error("action table incompatible with ring coordinate orders");
      if (dm > 0 && !m->shape_.is_zero(m->shape_.scale(dm, gen_action[i][j])))
        throw structural_error("action table incompatible with module coordinate orders");
    }
  }
  m->kind_ = Kind::bilinear;
  m->gen_action_ = std::move(gen_action);
  m->components_ = materialize_grading(m->shape_, ring->grading_group(), spec, ring->bound());
  m->desc_ = m->shape_.describe() + " over " + ring->describe();
  m->ring_ = std::move(ring);
  m->finish();
  return m;
}

GradedModule::Ptr GradedModule::from_op_tables(GradedRing::Ptr ring, OpTables t,
                                               ComponentMap comps, std::string desc) {
  auto m = std::shared_ptr<GradedModule>(new GradedModule());
  std::size_t n = t.add.size();
  if (n == 0 || t.neg.size() != n) throw structural_error("malformed module tables");
  m->shape_ = CyclicProduct({static_cast<Coord>(n)});
  m->kind_ = Kind::op_table;
  m->tables_ = std::move(t);
  m->components_ = std::move(comps);
  m->desc_ = std::move(desc);
  m->ring_ = std::move(ring);
  m->finish();
  return m;
}

Elem GradedModule::add(const Elem& a, const Elem& b) const {
  if (kind_ == Kind::op_table) {
    if (tables_->add.empty()) return ring_->add(a, b);  // ring-as-module over table ring
    return {static_cast<Coord>(tables_->add.at(a.at(0)).at(b.at(0)))};
  }
  return shape_.add(a, b);
}

Elem GradedModule::neg(const Elem& a) const {
  if (kind_ == Kind::op_table) {
    if (tables_->neg.empty()) return ring_->neg(a);
    return {static_cast<Coord>(tables_->neg.at(a.at(0)))};
  }
  return shape_.neg(a);
}

Elem GradedModule::scale_int(Coord k, const Elem& a) const {
  if (kind_ != Kind::op_table) return shape_.scale(k, a);
  Elem acc = zero();
  Elem step = k >= 0 ? a : neg(a);
  for (Coord i = 0, n = k >= 0 ? k : -k; i < n; ++i) acc = add(acc, step);
  return acc;
}

Elem GradedModule::act(const Elem& r, const Elem& m) const {
  switch (kind_) {
    case Kind::ring_mult:
      return ring_->mul(r, m);
    case Kind::integer_like:
      return shape_.scale(r.at(0), m);
    case Kind::bilinear: {
      Elem acc = shape_.zero();
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (m[j] == 0) continue;
          acc = shape_.add(acc, shape_.scale(r[i] * m[j], gen_action_[i][j]));
        }
      }
      return acc;
    }
    case Kind::op_table:
      if (tables_->mul.empty()) return ring_->mul(r, m);
      return {static_cast<Coord>(tables_->mul.at(r.at(0)).at(m.at(0)))};
  }
  throw structural_error("unreachable");
}

const CompSet* GradedModule::component(const Degree& d) const {
  Degree key = ring_->grading_group().reduce(d);
  for (const auto& [deg, cs] : components_)
    if (deg == key) return &cs;
  return nullptr;
}

Mem GradedModule::component_contains(const Degree& d, const Elem& x) const {
  const CompSet* cs = component(d);
  if (!cs) return is_zero(x) ? Mem::yes : Mem::no;
  return cs->contains(shape_, x, bound());
}

bool GradedModule::is_homogeneous(const Elem& x) const {
  if (is_zero(x)) return true;
  for (const auto& [d, cs] : components_)
    if (cs.contains(shape_, x, bound()) == Mem::yes) return true;
  return false;
}

std::optional<Degree> GradedModule::degree_of(const Elem& x) const {
  for (const auto& [d, cs] : components_)
    if (cs.contains(shape_, x, bound()) == Mem::yes) return d;
  return std::nullopt;
}

std::string GradedModule::show(const Elem& a) const {
  if (kind_ == Kind::op_table && tables_ && !tables_->labels.empty())
    return tables_->labels.at(a.at(0));
  if (kind_ == Kind::op_table && tables_ && tables_->labels.empty()) return ring_->show(a);
  return shape_.show(a);
}

Coord carrier_exponent(const CyclicProduct& shape) {
  Coord l = 1;
  for (Coord d : shape.orders())
    if (d > 0) l = std::lcm(l, d);
  return l;
}

bool scalar_box_complete(const GradedModule& m) {
  const GradedRing& r = *m.ring();
  if (r.finite()) return true;
  if (!m.finite()) return false;
  // every additive map out of the integer-like scalars factors through the
  // module exponent; a box covering a full residue system is exhaustive
  Coord period = carrier_exponent(m.shape());
  return 2LL * r.bound().value + 1 >= period;
}

CheckOutcome validate_graded_module(const GradedModule& m) {
  const GradedRing& r = *m.ring();
  const CyclicProduct& shape = m.shape();
  bool flagged = !(m.finite() && scalar_box_complete(m));
  std::vector<Elem> box = m.elements();
  std::vector<Elem> ring_box = r.elements();

  for (const auto& [d, cs] : m.components()) {
    if (cs.span) continue;
    if (!cs.list_complete) flagged = true;
    for (const Elem& x : cs.box_list) {
      if (cs.contains(shape, m.neg(x), m.bound()) == Mem::no)
        return CheckOutcome::fail({{"component", x}});
      for (const Elem& y : cs.box_list) {
        Elem s = m.add(x, y);
        Mem mem = cs.contains(shape, s, m.bound());
        if (mem == Mem::no && m.in_box(s))
          return CheckOutcome::fail({{"component_x", x}, {"component_y", y}});
        if (mem == Mem::unknown) flagged = true;
      }
    }
  }

  for (const Elem& x : box) {
    int n = count_decompositions(shape, m.components(), x, m.bound(), flagged, nullptr);
    if (n != 1) {
      CheckOutcome o = CheckOutcome::fail({{"element", x}});
      o.reason = n == 0 ? "no_decomposition" : "non_unique_decomposition";
      return o;
    }
  }

  // R_g M_h subset of M_{g+h}
  for (const auto& [g, cg] : r.components()) {
    for (const auto& [h, ch] : m.components()) {
      Degree gh = r.grading_group().combine(g, h);
      for (const Elem& x : cg.box_list)
        for (const Elem& y : ch.box_list) {
          Elem p = m.act(x, y);
          Mem mem = m.component_contains(gh, p);
          if (mem == Mem::no) return CheckOutcome::fail({{"r_g", x}, {"m_h", y}});
          if (mem == Mem::unknown) flagged = true;
        }
    }
  }

  // action axioms on the box
  for (const Elem& x : box)
    if (m.act(r.one(), x) != x) return CheckOutcome::fail({{"element", x}});
  for (const Elem& a : ring_box)
    for (const Elem& b : ring_box)
      for (const Elem& x : box) {
        if (m.act(r.mul(a, b), x) != m.act(a, m.act(b, x)))
          return CheckOutcome::fail({{"r", a}, {"s", b}, {"m", x}});
        if (m.act(r.add(a, b), x) != m.add(m.act(a, x), m.act(b, x)))
          return CheckOutcome::fail({{"r", a}, {"s", b}, {"m", x}});
      }
  for (const Elem& a : ring_box)
    for (const Elem& x : box)
      for (const Elem& y : box)
        if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y)))
          return CheckOutcome::fail({{"r", a}, {"m", x}, {"m2", y}});

  return CheckOutcome::pass(flagged, m.bound());
}

std::map<Degree, Elem> homogeneous_components(const Elem& x, const GradedModule& m) {
  bool flagged = false;
  std::vector<std::pair<Degree, Elem>> parts;
  int n = count_decompositions(m.shape(), m.components(), x, m.bound(), flagged, &parts);
  if (n != 1)
    throw structural_error("element of a validated module must decompose uniquely");
  std::map<Degree, Elem> out;
  for (auto& [d, p] : parts) out.emplace(d, p);
  return out;
}

}  // namespace gabs
