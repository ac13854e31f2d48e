#include "gabs/core.hpp"

#include <algorithm>
#include <cstdlib>

namespace gabs {

CyclicProduct::CyclicProduct(std::vector<Coord> orders) : orders_(std::move(orders)) {
  for (Coord d : orders_) {
    if (d < 0) throw structural_error("cyclic factor order must be >= 0");
    if (d == 0) finite_ = false;
  }
}

long long CyclicProduct::size() const {
  if (!finite_) throw structural_error("size of an infinite carrier");
  long long n = 1;
  for (Coord d : orders_) n *= d;
  return n;
}

Elem CyclicProduct::unit(std::size_t i) const {
  Elem e = zero();
  e.at(i) = 1;
  return reduce(std::move(e));
}

void CyclicProduct::check(const Elem& a) const {
  if (a.size() != orders_.size())
    throw structural_error("element rank does not match carrier " + describe());
}

Elem CyclicProduct::reduce(Elem x) const {
  check(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Coord d = orders_[i];
    if (d > 0) {
      x[i] %= d;
      if (x[i] < 0) x[i] += d;
    }
  }
  return x;
}

Elem CyclicProduct::add(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

Elem CyclicProduct::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem CyclicProduct::neg(const Elem& a) const {
  check(a);
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

Elem CyclicProduct::scale(Coord k, const Elem& a) const {
  check(a);
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return reduce(std::move(r));
}

bool CyclicProduct::is_zero(const Elem& a) const {
  check(a);
  return std::all_of(a.begin(), a.end(), [](Coord c) { return c == 0; });
}

bool CyclicProduct::in_box(const Elem& a, Bound b) const {
  check(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (orders_[i] == 0 && std::llabs(a[i]) > b.value) return false;
  return true;
}

std::strong_ordering CyclicProduct::compare(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (orders_[i] > 0) {
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    } else {
      if (auto c = std::llabs(a[i]) <=> std::llabs(b[i]); c != 0) return c;
      // same magnitude: positive first
      if (auto c = (a[i] < 0) <=> (b[i] < 0); c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Elem> CyclicProduct::enumerate(Bound b) const {
  // per-coordinate canonical sequences, earlier coordinates most significant
  std::vector<std::vector<Coord>> seqs(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] > 0) {
      for (Coord v = 0; v < orders_[i]; ++v) seqs[i].push_back(v);
    } else {
      seqs[i].push_back(0);
      for (Coord v = 1; v <= b.value; ++v) {
        seqs[i].push_back(v);
        seqs[i].push_back(-v);
      }
    }
  }
  std::vector<Elem> out;
  Elem cur(orders_.size(), 0);
  std::vector<std::size_t> idx(orders_.size(), 0);
  if (orders_.empty()) return {Elem{}};
  long long total = 1;
  for (auto& s : seqs) total *= static_cast<long long>(s.size());
  out.reserve(static_cast<std::size_t>(total));
  for (;;) {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = seqs[i][idx[i]];
    out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++idx[i] < seqs[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::string show_coords(const Elem& a) {
  if (a.empty()) return "()";
  if (a.size() == 1) return std::to_string(a[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::string CyclicProduct::show(const Elem& a) const {
  check(a);
  return show_coords(a);
}

std::string CyclicProduct::describe() const {
  if (orders_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "x";
    s += orders_[i] == 0 ? "Z" : "Z" + std::to_string(orders_[i]);
  }
  return s;
}

GradingGroup::GradingGroup(std::vector<Coord> orders) {
  for (Coord d : orders)
    if (d == 1 || d < 0)
      throw structural_error("grading group factor order must be 0 or >= 2");
  g_ = CyclicProduct(std::move(orders));
}

}  // namespace gabs
