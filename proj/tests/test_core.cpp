#include "doctest.h"

#include "gabs/core.hpp"

using namespace gabs;

TEST_CASE("degree arithmetic") {
  GradingGroup z2({2});
  CHECK(z2.combine({1}, {1}) == Degree{0});
  CHECK(z2.invert({1}) == Degree{1});

  GradingGroup z({0});
  CHECK(z.combine({0}, {1}) == Degree{1});
  CHECK(z.invert({3}) == Degree{-3});

  GradingGroup z2z({2, 0});
  CHECK(z2z.combine({1, 2}, {1, -2}) == Degree{0, 0});
  CHECK(z2z.invert({1, -4}) == Degree{1, 4});
  CHECK_THROWS_AS(z2z.combine({1}, {1, 0}), structural_error);
}

TEST_CASE("grading group orders must be 0 or >= 2") {
  CHECK_THROWS_AS(GradingGroup({1}), structural_error);
  CHECK_THROWS_AS(GradingGroup({-3}), structural_error);
  CHECK_NOTHROW(GradingGroup({}));
}

TEST_CASE("carrier enumeration") {
  CyclicProduct z2({2});
  CHECK(z2.enumerate(Bound(5)) == std::vector<Elem>{{0}, {1}});

  CyclicProduct z({0});
  CHECK(z.enumerate(Bound(2)) == std::vector<Elem>{{0}, {1}, {-1}, {2}, {-2}});

  // product sequence = lexicographic product of the coordinate sequences
  CyclicProduct zz6({0, 6});
  std::vector<Elem> expected;
  for (const Elem& x : z.enumerate(Bound(1)))
    for (Coord c = 0; c < 6; ++c) expected.push_back({x[0], c});
  std::vector<Elem> got = zz6.enumerate(Bound(1));
  CHECK(got.size() == 18);
  CHECK(got == expected);
  CHECK(got[0] == Elem{0, 0});
  CHECK(got[1] == Elem{0, 1});
  CHECK(got[2] == Elem{0, 2});
}

TEST_CASE("canonical order") {
  CyclicProduct z({0});
  CHECK(z.less({2}, {-2}));
  CHECK(z.less({2}, {6}));
  CyclicProduct zz6({0, 6});
  CHECK(zz6.less({0, 3}, {1, 0}));

  // strict total order on every enumerated sequence
  for (const CyclicProduct& cp : {CyclicProduct({0}), CyclicProduct({2, 3}), zz6}) {
    std::vector<Elem> seq = cp.enumerate(Bound(2));
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = 0; j < seq.size(); ++j) {
        if (i < j) CHECK(cp.less(seq[i], seq[j]));
        if (i == j) CHECK(cp.compare(seq[i], seq[j]) == std::strong_ordering::equal);
        if (i > j) CHECK(cp.less(seq[j], seq[i]));
      }
  }
}

TEST_CASE("finite enumeration is a bijection") {
  CyclicProduct cp({4, 3});
  std::vector<Elem> seq = cp.enumerate(Bound(1));
  CHECK(static_cast<long long>(seq.size()) == cp.size());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(cp.less(seq[i], seq[i + 1]));
}

TEST_CASE("degree group axioms, exhaustively on small boxes") {
  for (const GradingGroup& g : {GradingGroup({2}), GradingGroup({0}), GradingGroup({2, 0})}) {
    std::vector<Degree> degs = g.enumerate(Bound(2));
    for (const Degree& a : degs) {
      CHECK(g.combine(a, g.identity()) == a);
      CHECK(g.carrier().is_zero(g.combine(a, g.invert(a))));
      for (const Degree& b : degs) {
        CHECK(g.combine(a, b) == g.combine(b, a));
        for (const Degree& c : degs)
          CHECK(g.combine(g.combine(a, b), c) == g.combine(a, g.combine(b, c)));
      }
    }
  }
}
