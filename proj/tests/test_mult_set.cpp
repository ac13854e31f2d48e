#include "doctest.h"

#include "gabs/mult_set.hpp"

using namespace gabs;

namespace {

GradedRing::Ptr z12() { return GradedRing::modular(12, GradingGroup({2})); }

// oracle: iterate products to a fixpoint
std::vector<Coord> closure_oracle(Coord n, Coord gen) {
  std::vector<bool> in(n, false);
  in[1 % n] = true;
  in[gen % n] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Coord a = 0; a < n; ++a)
      for (Coord b = 0; b < n; ++b)
        if (in[a] && in[b] && !in[(a * b) % n]) {
          in[(a * b) % n] = true;
          changed = true;
        }
  }
  std::vector<Coord> out;
  for (Coord a = 0; a < n; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("multiplicative closures in Z12") {
  auto r = z12();
  CHECK(MultiplicativeSet::closure(r, {}).elements() == std::vector<Elem>{{1}});
  CHECK(MultiplicativeSet::closure(r, {{4}}).elements() == std::vector<Elem>{{1}, {4}});
  for (Coord g = 0; g < 12; ++g) {
    MultiplicativeSet s = MultiplicativeSet::closure(r, {{g}});
    std::vector<Elem> expect;
    for (Coord x : closure_oracle(12, g)) expect.push_back({x});
    CHECK(s.elements() == expect);
    CHECK(s.exact());
  }
  CHECK(MultiplicativeSet::closure(r, {{0}}).contains_zero());
  CHECK(MultiplicativeSet::closure(r, {{6}}).contains_zero());  // 6*6 = 0 mod 12
}

TEST_CASE("bounded closure over the integers") {
  auto r = GradedRing::integers(GradingGroup({0}));
  MultiplicativeSet s = MultiplicativeSet::closure(r, {{6}});
  CHECK(s.elements() == std::vector<Elem>{{1}, {6}});  // 36 falls outside the box
  CHECK_FALSE(s.exact());
  MultiplicativeSet u = MultiplicativeSet::units(r);
  CHECK(u.elements() == std::vector<Elem>{{1}, {-1}});
  CHECK(u.exact());
  MultiplicativeSet nz = MultiplicativeSet::nonzero_integers(r);
  CHECK(nz.elements().size() == 20);
  CHECK_FALSE(nz.exact());
  CHECK(nz.contains({6}));
}

TEST_CASE("non-homogeneous generators are rejected") {
  auto r = GradedRing::group_algebra(2, GradingGroup({2}));
  CHECK_THROWS_AS(MultiplicativeSet::closure(r, {{1, 1}}), std::invalid_argument);
  CHECK_NOTHROW(MultiplicativeSet::closure(r, {{0, 1}}));
}

TEST_CASE("saturation") {
  auto r = z12();
  SUBCASE("A = {1} saturates to the unit group") {
    MultiplicativeSet star = saturate(MultiplicativeSet::closure(r, {}));
    CHECK(star.elements() == std::vector<Elem>{{1}, {5}, {7}, {11}});
  }
  SUBCASE("A = {1,4} by the defining quadruple search") {
    MultiplicativeSet a = MultiplicativeSet::closure(r, {{4}});
    // oracle: cand in A* iff b cand t = b u for some homogeneous t and u, b in A
    std::vector<Elem> expect;
    for (Coord cand = 0; cand < 12; ++cand) {
      bool in = false;
      for (Coord t = 0; t < 12 && !in; ++t)
        for (Coord u : {1, 4})
          for (Coord b : {1, 4})
            if ((b * cand * t) % 12 == (b * u) % 12) in = true;
      if (in) expect.push_back({cand});
    }
    MultiplicativeSet star = saturate(a);
    CHECK(star.elements() == expect);
    // everything coprime to 3 survives
    CHECK(star.elements().size() == 8);
    for (const Elem& x : a.elements()) CHECK(star.contains(x));
  }
  SUBCASE("idempotence on finite carriers") {
    for (Coord g : {Coord{1}, Coord{4}, Coord{5}, Coord{2}}) {
      MultiplicativeSet a = MultiplicativeSet::closure(r, {{g}});
      MultiplicativeSet star = saturate(a);
      CHECK(saturate(star).elements() == star.elements());
    }
  }
}
