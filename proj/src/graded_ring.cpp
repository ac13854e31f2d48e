#include "gabs/graded_ring.hpp"

#include <algorithm>
#include <set>

namespace gabs {

void GradedRing::finish() {
  auto less = [&](const Elem& a, const Elem& b) { return shape_.less(a, b); };
  std::set<Elem, decltype(less)> h(less);
  for (const auto& [d, cs] : components_)
    for (const Elem& x : cs.box_list) h.insert(x);
  homogeneous_.assign(h.begin(), h.end());
}

GradedRing::Ptr GradedRing::make_bilinear(std::vector<Coord> orders, Elem one,
                                          std::vector<std::vector<Elem>> gen_products,
                                          GradingGroup g, GradingSpec spec, Bound b,
                                          std::string desc, bool diagonal) {
  auto r = std::shared_ptr<GradedRing>(new GradedRing());
  r->shape_ = CyclicProduct(std::move(orders));
  r->group_ = std::move(g);
  r->bound_ = b;
  const auto& shape = r->shape_;
  if (gen_products.size() != shape.rank())
    throw structural_error("structure constants must cover every generator pair");
  for (std::size_t i = 0; i < shape.rank(); ++i) {
    if (gen_products[i].size() != shape.rank())
      throw structural_error("structure constants must cover every generator pair");
    for (std::size_t j = 0; j < shape.rank(); ++j) {
      gen_products[i][j] = shape.reduce(gen_products[i][j]);
      // bilinear extension is well-defined only when d_i * (e_i e_j) = 0
      for (std::size_t k : {i, j}) {
        Coord d = shape.orders()[k];
        if (d > 0 && !shape.is_zero(shape.scale(d, gen_products[i][j])))
          throw structural_error("structure constants incompatible with coordinate orders");
      }
    }
  }
  r->gen_products_ = std::move(gen_products);
  r->diagonal_ = diagonal;
  r->one_ = shape.reduce(std::move(one));
  r->components_ = materialize_grading(shape, r->group_, spec, b);
  r->desc_ = std::move(desc);
  r->finish();
  return r;
}

GradedRing::Ptr GradedRing::modular(Coord n, GradingGroup g, GradingSpec spec, Bound b) {
  if (n < 2) throw structural_error("modulus must be >= 2");
  return make_bilinear({n}, {1}, {{{1}}}, std::move(g), std::move(spec), b,
                       "Z" + std::to_string(n), true);
}

GradedRing::Ptr GradedRing::integers(GradingGroup g, GradingSpec spec, Bound b) {
  return make_bilinear({0}, {1}, {{{1}}}, std::move(g), std::move(spec), b, "Z", true);
}

GradedRing::Ptr GradedRing::product(std::vector<Coord> orders, GradingGroup g, GradingSpec spec,
                                    Bound b) {
  std::size_t k = orders.size();
  if (k == 0) throw structural_error("product ring needs at least one factor");
  Elem one(k, 1);
  std::vector<std::vector<Elem>> gp(k, std::vector<Elem>(k, Elem(k, 0)));
  for (std::size_t i = 0; i < k; ++i) gp[i][i][i] = 1;
  std::string desc = CyclicProduct(orders).describe();
  return make_bilinear(std::move(orders), std::move(one), std::move(gp), std::move(g),
                       std::move(spec), b, std::move(desc), true);
}

GradedRing::Ptr GradedRing::group_algebra(Coord base, GradingGroup g, Bound b) {
  if (base < 2) throw structural_error("group algebra base must be Z_n with n >= 2");
  if (!g.finite()) throw structural_error("group algebra needs a finite grading group");
  std::vector<Degree> elems = g.enumerate(b);
  std::size_t k = elems.size();
  std::vector<Coord> orders(k, base);
  auto index_of = [&](const Degree& d) {
    auto it = std::find(elems.begin(), elems.end(), d);
    return static_cast<std::size_t>(it - elems.begin());
  };
  std::vector<std::vector<Elem>> gp(k, std::vector<Elem>(k, Elem(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gp[i][j][index_of(g.combine(elems[i], elems[j]))] = 1;
  Elem one(k, 0);
  one[index_of(g.identity())] = 1;
  GradingSpec spec = GradingSpec::by_coordinate(elems);
  std::string desc = "Z" + std::to_string(base) + "[" + g.carrier().describe() + "]";
  return make_bilinear(std::move(orders), std::move(one), std::move(gp), std::move(g),
                       std::move(spec), b, std::move(desc), false);
}

GradedRing::Ptr GradedRing::structure_table(std::vector<Coord> orders, Elem one,
                                            std::vector<std::vector<Elem>> gen_products,
                                            GradingGroup g, GradingSpec spec, Bound b) {
  std::string desc = "table(" + CyclicProduct(orders).describe() + ")";
  return make_bilinear(std::move(orders), std::move(one), std::move(gen_products), std::move(g),
                       std::move(spec), b, std::move(desc), false);
}

GradedRing::Ptr GradedRing::from_op_tables(OpTables t, GradingGroup g, ComponentMap comps,
                                           std::string desc, Bound b) {
  auto r = std::shared_ptr<GradedRing>(new GradedRing());
  std::size_t n = t.add.size();
  if (n == 0 || t.neg.size() != n || t.mul.size() != n)
    throw structural_error("malformed operation tables");
  r->shape_ = CyclicProduct({static_cast<Coord>(n)});
  r->group_ = std::move(g);
  r->bound_ = b;
  r->one_ = {static_cast<Coord>(t.one)};
  r->tables_ = std::move(t);
  r->components_ = std::move(comps);
  r->desc_ = std::move(desc);
  r->finish();
  return r;
}

Elem GradedRing::add(const Elem& a, const Elem& b) const {
  if (tables_) return {static_cast<Coord>(tables_->add.at(a.at(0)).at(b.at(0)))};
  return shape_.add(a, b);
}

Elem GradedRing::neg(const Elem& a) const {
  if (tables_) return {static_cast<Coord>(tables_->neg.at(a.at(0)))};
  return shape_.neg(a);
}

Elem GradedRing::mul(const Elem& a, const Elem& b) const {
  if (tables_) return {static_cast<Coord>(tables_->mul.at(a.at(0)).at(b.at(0)))};
  if (a.size() != shape_.rank() || b.size() != shape_.rank())
    throw structural_error("element rank does not match ring carrier");
  Elem acc = shape_.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      acc = shape_.add(acc, shape_.scale(a[i] * b[j], gen_products_[i][j]));
    }
  }
  return acc;
}

const CompSet* GradedRing::component(const Degree& d) const {
  Degree key = group_.reduce(d);
  for (const auto& [deg, cs] : components_)
    if (deg == key) return &cs;
  return nullptr;
}

Mem GradedRing::component_contains(const Degree& d, const Elem& x) const {
  const CompSet* cs = component(d);
  if (!cs) return is_zero(x) ? Mem::yes : Mem::no;  // undeclared degree = zero component
  return cs->contains(shape_, x, bound_);
}

bool GradedRing::is_homogeneous(const Elem& x) const {
  if (is_zero(x)) return true;
  for (const auto& [d, cs] : components_)
    if (cs.contains(shape_, x, bound_) == Mem::yes) return true;
  return false;
}

std::optional<Degree> GradedRing::degree_of(const Elem& x) const {
  for (const auto& [d, cs] : components_)
    if (cs.contains(shape_, x, bound_) == Mem::yes) return d;
  return std::nullopt;
}

std::vector<Elem> GradedRing::units(bool& exact) const {
  std::vector<Elem> out;
  for (const Elem& x : elements()) {
    bool unit = false;
    for (const Elem& y : elements())
      if (mul(x, y) == one_) {
        unit = true;
        break;
      }
    if (unit) out.push_back(x);
  }
  // diagonal multiplication forces unit coordinates into {-1, 1} on infinite
  // factors, so the box search is complete there as well
  exact = finite() || diagonal_;
  return out;
}

std::string GradedRing::show(const Elem& a) const {
  if (tables_ && !tables_->labels.empty()) return tables_->labels.at(a.at(0));
  return shape_.show(a);
}

CheckOutcome validate_graded_ring(const GradedRing& r) {
  const CyclicProduct& shape = r.shape();
  bool flagged = !r.finite();
  std::vector<Elem> box = r.elements();

  // component subgroup closure (span components are subgroups by construction)
  for (const auto& [d, cs] : r.components()) {
    if (cs.span) continue;
    if (!flagged) flagged = !cs.list_complete;
    for (const Elem& x : cs.box_list) {
      Elem n = r.neg(x);
      if (cs.contains(shape, n, r.bound()) == Mem::no)
        return CheckOutcome::fail({{"component", x}, {"negation", n}});
      for (const Elem& y : cs.box_list) {
        Elem s = r.add(x, y);
        Mem m = cs.contains(shape, s, r.bound());
        if (m == Mem::no && r.in_box(s))
          return CheckOutcome::fail({{"component_x", x}, {"component_y", y}});
        if (m == Mem::unknown) flagged = true;
      }
    }
  }

  // additive direct sum
  for (const Elem& x : box) {
    int n = count_decompositions(shape, r.components(), x, r.bound(), flagged,
                                 nullptr);
    if (n != 1) {
      CheckOutcome o = CheckOutcome::fail({{"element", x}});
      o.reason = n == 0 ? "no_decomposition" : "non_unique_decomposition";
      return o;
    }
  }

  // 1 in R_e
  if (r.component_contains(r.grading_group().identity(), r.one()) != Mem::yes)
    return CheckOutcome::fail({{"one", r.one()}});

  // R_g R_h subset of R_{g+h}
  for (const auto& [g, cg] : r.components()) {
    for (const auto& [h, ch] : r.components()) {
      Degree gh = r.grading_group().combine(g, h);
      for (const Elem& x : cg.box_list)
        for (const Elem& y : ch.box_list) {
          Elem p = r.mul(x, y);
          Mem m = r.component_contains(gh, p);
          if (m == Mem::no) return CheckOutcome::fail({{"r_g", x}, {"r_h", y}});
          if (m == Mem::unknown) flagged = true;
        }
    }
  }

  // ring axioms on the box
  for (const Elem& x : box) {
    if (r.mul(x, r.one()) != x) return CheckOutcome::fail({{"element", x}});
    for (const Elem& y : box) {
      if (r.mul(x, y) != r.mul(y, x)) return CheckOutcome::fail({{"x", x}, {"y", y}});
      for (const Elem& z : box) {
        if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z)))
          return CheckOutcome::fail({{"x", x}, {"y", y}, {"z", z}});
        if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)))
          return CheckOutcome::fail({{"x", x}, {"y", y}, {"z", z}});
      }
    }
  }

  return CheckOutcome::pass(flagged, r.bound());
}

}  // namespace gabs
