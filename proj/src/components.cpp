#include "gabs/components.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gabs {

Mem CompSet::contains(const CyclicProduct& shape, const Elem& x, Bound b) const {
  if (span) {
    if (x.size() != span->size()) throw structural_error("component rank mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(*span)[i] && x[i] != 0) return Mem::no;
    return Mem::yes;
  }
  bool found = std::binary_search(box_list.begin(), box_list.end(), x,
                                  [&](const Elem& a, const Elem& c) { return shape.less(a, c); });
  if (found) return Mem::yes;
  if (list_complete) return Mem::no;
  return shape.in_box(x, b) ? Mem::no : Mem::unknown;
}

bool CompSet::all_zero() const {
  if (span) return std::all_of(span->begin(), span->end(), [](char c) { return !c; });
  return box_list.size() <= 1;
}

std::vector<Elem> additive_closure(const CyclicProduct& shape, const std::vector<Elem>& seed,
                                   Bound b, bool& truncated) {
  auto less = [&](const Elem& a, const Elem& c) { return shape.less(a, c); };
  std::set<Elem, decltype(less)> out(less);
  out.insert(shape.zero());
  std::vector<Elem> work;
  for (const Elem& x : seed) {
    Elem r = shape.reduce(x);
    if (!shape.in_box(r, b)) {
      truncated = true;
      continue;
    }
    if (out.insert(r).second) work.push_back(r);
  }
  while (!work.empty()) {
    Elem x = std::move(work.back());
    work.pop_back();
    std::vector<Elem> next;
    next.push_back(shape.neg(x));
    for (const Elem& y : out) next.push_back(shape.add(x, y));
    for (Elem& n : next) {
      if (!shape.in_box(n, b)) {
        truncated = true;
        continue;
      }
      if (out.insert(n).second) work.push_back(n);
    }
  }
  return {out.begin(), out.end()};
}

static std::vector<Elem> span_box_list(const CyclicProduct& shape, const std::vector<char>& mask,
                                       Bound b) {
  std::vector<Coord> sub = shape.orders();
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (!mask[i]) sub[i] = 1;
  return CyclicProduct(sub).enumerate(b);
}

ComponentMap materialize_grading(const CyclicProduct& shape, const GradingGroup& group,
                                 const GradingSpec& spec, Bound b) {
  std::map<Degree, CompSet> by_degree;
  auto add_span = [&](const Degree& d, std::size_t coord) {
    Degree key = group.reduce(d);
    auto& cs = by_degree[key];
    if (!cs.span) cs.span = std::vector<char>(shape.rank(), 0);
    (*cs.span)[coord] = 1;
  };

  switch (spec.kind) {
    case GradingSpec::Kind::trivial: {
      CompSet cs;
      cs.span = std::vector<char>(shape.rank(), 1);
      by_degree[group.identity()] = std::move(cs);
      break;
    }
    case GradingSpec::Kind::by_coordinate: {
      if (spec.coordinate_degrees.size() != shape.rank())
        throw structural_error("component assignment must name every carrier coordinate");
      for (std::size_t i = 0; i < shape.rank(); ++i) add_span(spec.coordinate_degrees[i], i);
      break;
    }
    case GradingSpec::Kind::by_generators: {
      for (const auto& [d, gens] : spec.generators) {
        Degree key = group.reduce(d);
        bool truncated = false;
        CompSet cs;
        cs.box_list = additive_closure(shape, gens, b, truncated);
        cs.list_complete = shape.finite() || !truncated;
        // merging two declarations of the same degree is not supported
        if (by_degree.count(key)) throw structural_error("duplicate component degree");
        by_degree[key] = std::move(cs);
      }
      break;
    }
  }

  ComponentMap out;
  for (auto& [d, cs] : by_degree) {
    if (cs.span) {
      cs.box_list = span_box_list(shape, *cs.span, b);
      bool infinite_span = false;
      for (std::size_t i = 0; i < shape.rank(); ++i)
        if ((*cs.span)[i] && shape.orders()[i] == 0) infinite_span = true;
      cs.list_complete = !infinite_span;
    }
    out.emplace_back(d, std::move(cs));
  }
  return out;
}

int count_decompositions(const CyclicProduct& shape, const ComponentMap& comps, const Elem& x,
                         Bound b, bool& flagged, std::vector<std::pair<Degree, Elem>>* out) {
  bool all_span = std::all_of(comps.begin(), comps.end(),
                              [](const auto& c) { return c.second.span.has_value(); });
  if (all_span) {
    // a coordinate carried by several spans admits several decompositions of
    // its unit vector; an uncovered coordinate with a nonzero entry admits none
    std::vector<int> cover(shape.rank(), 0);
    for (const auto& [d, cs] : comps)
      for (std::size_t i = 0; i < shape.rank(); ++i) cover[i] += (*cs.span)[i] ? 1 : 0;
    for (std::size_t i = 0; i < shape.rank(); ++i) {
      // an overlapped coordinate can shift a nonzero value between two spans
      if (cover[i] > 1 && shape.orders()[i] != 1) return 2;
      if (x[i] != 0 && cover[i] == 0) return 0;
    }
    if (out) {
      out->clear();
      for (const auto& [d, cs] : comps) {
        Elem part = shape.zero();
        for (std::size_t i = 0; i < shape.rank(); ++i)
          if ((*cs.span)[i]) part[i] = x[i];
        if (!shape.is_zero(part)) out->emplace_back(d, std::move(part));
      }
    }
    return 1;
  }

  int count = 0;
  std::vector<std::pair<Degree, Elem>> parts;
  std::vector<std::pair<Degree, Elem>> best;
  auto rec = [&](auto&& self, std::size_t idx, const Elem& remaining) -> void {
    if (count >= 2) return;
    if (idx == comps.size()) {
      if (shape.is_zero(remaining)) {
        ++count;
        if (count == 1) best = parts;
      }
      return;
    }
    const auto& cs = comps[idx].second;
    if (!cs.list_complete) flagged = true;
    for (const Elem& p : cs.box_list) {
      parts.emplace_back(comps[idx].first, p);
      self(self, idx + 1, shape.sub(remaining, p));
      parts.pop_back();
      if (count >= 2) return;
    }
  };
  rec(rec, 0, x);
  if (count == 1 && out) {
    out->clear();
    for (auto& [d, p] : best)
      if (!shape.is_zero(p)) out->emplace_back(d, p);
  }
  return count;
}

}  // namespace gabs
