#include "gabs/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gabs {

namespace {

struct Partition {
  std::vector<std::pair<Elem, Elem>> pairs;  // canonical order, numerator-major
  std::vector<int> cls;                      // pair index -> class id
  std::vector<std::pair<Elem, Elem>> reps;
  std::vector<std::vector<std::pair<Elem, Elem>>> members;
  std::map<std::pair<Elem, Elem>, int> lookup;
};

int find_root(std::vector<int>& up, int i) {
  while (up[i] != i) i = up[i] = up[up[i]];
  return i;
}

// partition carrier x A by (m,a) ~ (m',a') iff b (a' m - a m') = 0 in the
// module sense; `act` folds both the ring and module cases
template <class Act, class AddSub>
Partition partition_pairs(const std::vector<Elem>& carrier, const MultiplicativeSet& a,
                          Act act, AddSub sub, const std::function<bool(const Elem&)>& is_zero) {
  Partition p;
  for (const Elem& x : carrier)
    for (const Elem& d : a.elements()) p.pairs.emplace_back(x, d);
  std::size_t n = p.pairs.size();
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  auto equivalent = [&](std::size_t i, std::size_t j) {
    const auto& [m1, a1] = p.pairs[i];
    const auto& [m2, a2] = p.pairs[j];
    Elem diff = sub(act(a2, m1), act(a1, m2));
    for (const Elem& b : a.elements())
      if (is_zero(act(b, diff))) return true;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int ri = find_root(up, static_cast<int>(i)), rj = find_root(up, static_cast<int>(j));
      if (ri == rj) continue;
      if (equivalent(i, j)) up[std::max(ri, rj)] = std::min(ri, rj);
    }
  p.cls.resize(n);
  std::map<int, int> renumber;  // roots appear in canonical pair order
  for (std::size_t i = 0; i < n; ++i) {
    int r = find_root(up, static_cast<int>(i));
    auto it = renumber.find(r);
    if (it == renumber.end()) {
      it = renumber.emplace(r, static_cast<int>(p.reps.size())).first;
      p.reps.push_back(p.pairs[i]);
      p.members.emplace_back();
    }
    p.cls[i] = it->second;
    p.members[it->second].push_back(p.pairs[i]);
    p.lookup[p.pairs[i]] = it->second;
  }
  return p;
}

std::string fraction_label(const GradedRing& r, const Elem& num, const Elem& den) {
  return r.show(num) + "/" + r.show(den);
}

}  // namespace

int LocalizedRing::class_of(const Elem& num, const Elem& den) const {
  for (std::size_t c = 0; c < members.size(); ++c)
    for (const auto& p : members[c])
      if (p.first == num && p.second == den) return static_cast<int>(c);
  throw structural_error("fraction outside the computed partition");
}

bool LocalizedRing::is_unit(int cls) const {
  Elem x{static_cast<Coord>(cls)};
  for (const Elem& y : ring->elements())
    if (ring->mul(x, y) == ring->one()) return true;
  return false;
}

int LocalizedModule::class_of(const Elem& num, const Elem& den) const {
  for (std::size_t c = 0; c < members.size(); ++c)
    for (const auto& p : members[c])
      if (p.first == num && p.second == den) return static_cast<int>(c);
  throw structural_error("fraction outside the computed partition");
}

LocalizedRing localize_ring(GradedRing::Ptr r, const MultiplicativeSet& a) {
  if (!r->finite())
    throw structural_error("localization is supported on finite carriers only");
  if (a.ring() != r) throw structural_error("multiplicative set lives in a different ring");

  auto act = [&](const Elem& x, const Elem& y) { return r->mul(x, y); };
  auto sub = [&](const Elem& x, const Elem& y) { return r->sub(x, y); };
  Partition p = partition_pairs(r->elements(), a, act, sub,
                                [&](const Elem& x) { return r->is_zero(x); });

  std::size_t n = p.reps.size();
  auto cls_of = [&](const Elem& num, const Elem& den) {
    return p.lookup.at({r->shape().reduce(num), den});
  };

  // operations on representatives, then representative independence
  OpTables t;
  t.add.assign(n, std::vector<int>(n, 0));
  t.mul.assign(n, std::vector<int>(n, 0));
  t.neg.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x, ax] = p.reps[i];
    t.neg[i] = cls_of(r->neg(x), ax);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [y, ay] = p.reps[j];
      t.add[i][j] = cls_of(r->add(r->mul(ay, x), r->mul(ax, y)), r->mul(ax, ay));
      t.mul[i][j] = cls_of(r->mul(x, y), r->mul(ax, ay));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [x, ax] : p.members[i])
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [y, ay] : p.members[j]) {
          if (cls_of(r->add(r->mul(ay, x), r->mul(ax, y)), r->mul(ax, ay)) != t.add[i][j] ||
              cls_of(r->mul(x, y), r->mul(ax, ay)) != t.mul[i][j])
            throw structural_error("fraction operations not well-defined on classes");
        }
  t.zero = cls_of(r->zero(), r->one());
  t.one = cls_of(r->one(), r->one());
  for (std::size_t i = 0; i < n; ++i)
    t.labels.push_back(fraction_label(*r, p.reps[i].first, p.reps[i].second));

  // degree of a class: deg(num) - deg(den) over homogeneous members
  std::map<Degree, std::vector<Elem>> comp_ids;
  const GradingGroup& g = r->grading_group();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [x, ax] : p.members[i])
      for (const auto& [dn, cn] : r->components()) {
        if (cn.contains(r->shape(), x, r->bound()) != Mem::yes) continue;
        for (const auto& [dd, cd] : r->components()) {
          if (cd.contains(r->shape(), ax, r->bound()) != Mem::yes) continue;
          comp_ids[g.combine(dn, g.invert(dd))].push_back({static_cast<Coord>(i)});
        }
      }
  ComponentMap comps;
  for (auto& [d, ids] : comp_ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    CompSet cs;
    cs.box_list = ids;
    cs.list_complete = true;
    comps.emplace_back(d, std::move(cs));
  }

  LocalizedRing out;
  out.reps = p.reps;
  out.members = p.members;
  out.ring = GradedRing::from_op_tables(std::move(t), g, std::move(comps),
                                        "frac(" + r->describe() + "," + a.show() + ")",
                                        r->bound());
  return out;
}

LocalizedModule localize_module(GradedModule::Ptr m, const MultiplicativeSet& a) {
  if (!m->finite())
    throw structural_error("localization is supported on finite carriers only");
  const GradedRing::Ptr& r = m->ring();
  if (!r->finite())
    throw structural_error("localization is supported on finite carriers only");

  LocalizedRing lr = localize_ring(r, a);

  auto act = [&](const Elem& x, const Elem& y) { return m->act(x, y); };
  auto sub = [&](const Elem& x, const Elem& y) { return m->sub(x, y); };
  Partition p = partition_pairs(m->elements(), a, act, sub,
                                [&](const Elem& x) { return m->is_zero(x); });

  std::size_t n = p.reps.size();
  auto cls_of = [&](const Elem& num, const Elem& den) { return p.lookup.at({num, den}); };

  OpTables t;
  t.add.assign(n, std::vector<int>(n, 0));
  t.neg.assign(n, 0);
  std::size_t rn = lr.reps.size();
  t.mul.assign(rn, std::vector<int>(n, 0));  // scalar action by ring class
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x, ax] = p.reps[i];
    t.neg[i] = cls_of(m->neg(x), ax);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [y, ay] = p.reps[j];
      t.add[i][j] = cls_of(m->add(m->act(ay, x), m->act(ax, y)), r->mul(ax, ay));
    }
  }
  for (std::size_t i = 0; i < rn; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [rx, ra] = lr.reps[i];
      const auto& [y, ay] = p.reps[j];
      t.mul[i][j] = cls_of(m->act(rx, y), r->mul(ra, ay));
    }
  // representative independence, across both partitions for the action
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [x, ax] : p.members[i])
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [y, ay] : p.members[j])
          if (cls_of(m->add(m->act(ay, x), m->act(ax, y)), r->mul(ax, ay)) != t.add[i][j])
            throw structural_error("fraction addition not well-defined on classes");
  for (std::size_t i = 0; i < rn; ++i)
    for (const auto& [rx, ra] : lr.members[i])
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [y, ay] : p.members[j])
          if (cls_of(m->act(rx, y), r->mul(ra, ay)) != t.mul[i][j])
            throw structural_error("fraction action not well-defined on classes");
  t.zero = cls_of(m->zero(), r->one());
  for (std::size_t i = 0; i < n; ++i) {
    const GradedRing& rr = *r;
    t.labels.push_back(m->show(p.reps[i].first) + "/" + rr.show(p.reps[i].second));
  }

  std::map<Degree, std::vector<Elem>> comp_ids;
  const GradingGroup& g = r->grading_group();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [x, ax] : p.members[i])
      for (const auto& [dn, cn] : m->components()) {
        if (cn.contains(m->shape(), x, m->bound()) != Mem::yes) continue;
        for (const auto& [dd, cd] : r->components()) {
          if (cd.contains(r->shape(), ax, r->bound()) != Mem::yes) continue;
          comp_ids[g.combine(dn, g.invert(dd))].push_back({static_cast<Coord>(i)});
        }
      }
  ComponentMap comps;
  for (auto& [d, ids] : comp_ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    CompSet cs;
    cs.box_list = ids;
    cs.list_complete = true;
    comps.emplace_back(d, std::move(cs));
  }

  LocalizedModule out;
  out.ring_part = std::move(lr);
  out.reps = p.reps;
  out.members = p.members;
  out.module = GradedModule::from_op_tables(
      out.ring_part.ring, std::move(t), std::move(comps),
      "frac(" + m->describe() + "," + a.show() + ")");
  return out;
}

GradedSubmodule localize_submodule(const GradedSubmodule& c, const MultiplicativeSet& a,
                                   const LocalizedModule& lm) {
  std::vector<Elem> ids;
  for (const Elem& x : c.elements())
    for (const Elem& d : a.elements())
      ids.push_back({static_cast<Coord>(lm.class_of(x, d))});
  return GradedSubmodule::trusted(lm.module, std::move(ids), true);
}

}  // namespace gabs
