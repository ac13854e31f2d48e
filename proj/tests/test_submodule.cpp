#include "doctest.h"

#include "gabs/predicates.hpp"

using namespace gabs;

namespace {

GradedModule::Ptr z12_module() {
  return GradedModule::ring_as_module(GradedRing::modular(12, GradingGroup({2})));
}

GradedModule::Ptr mixed_module() {
  auto ring = GradedRing::integers(GradingGroup({0}));
  return GradedModule::cyclic_product(ring, {0, 6},
                                      GradingSpec::by_coordinate({{0}, {1}}));
}

GradedModule::Ptr torsion_module() {
  auto ring = GradedRing::integers(GradingGroup({2}));
  return GradedModule::cyclic_product(ring, {6}, GradingSpec::by_coordinate({{0}}));
}

}  // namespace

TEST_CASE("gradedness of a candidate set") {
  SUBCASE("the ideal (1 + t) of Z2[Z2] is closed but not graded") {
    auto m = GradedModule::ring_as_module(GradedRing::group_algebra(2, GradingGroup({2})));
    std::vector<Elem> cand{{0, 0}, {1, 1}};
    CheckOutcome o = is_graded_submodule(*m, cand);
    REQUIRE(o.verdict == Verdict::fails);
    CHECK(*find_label(o.counterexample, "element") == Elem{1, 1});
    CHECK(*find_label(o.counterexample, "part") == Elem{1, 0});
    CHECK_THROWS_AS(GradedSubmodule::from_elements(m, cand), structural_error);
  }
  SUBCASE("zero submodule and whole module are graded") {
    auto m = mixed_module();
    CHECK(is_graded_submodule(*m, GradedSubmodule::zero(m).elements()).ok());
    CHECK(is_graded_submodule(*m, GradedSubmodule::whole(m).elements()).ok());
  }
}

TEST_CASE("generate_submodule") {
  SUBCASE("multiples of 4 in Z12") {
    auto m = z12_module();
    GradedSubmodule s = generate_submodule(m, {{4}});
    // oracle: multiples of 4 mod 12
    std::vector<Elem> expect{{0}, {4}, {8}};
    CHECK(s.elements() == expect);
    CHECK(s.exact());
  }
  SUBCASE("no generators gives the zero submodule") {
    auto m = z12_module();
    CHECK(generate_submodule(m, {}).elements() == std::vector<Elem>{{0}});
  }
  SUBCASE("torsion generator in the mixed module is exact") {
    auto m = mixed_module();
    GradedSubmodule s = generate_submodule(m, {{0, 1}});
    // oracle: Z . (0,1) enumerated
    CHECK(s.size() == 6);
    CHECK(s.exact());
    for (Coord c = 0; c < 6; ++c) CHECK(s.contains({0, c}) == Mem::yes);
    CHECK(s.contains({1, 0}) == Mem::no);
  }
  SUBCASE("non-homogeneous generator is rejected") {
    auto m = mixed_module();
    CHECK_THROWS_AS(generate_submodule(m, {{1, 1}}), std::invalid_argument);
  }
  SUBCASE("generated sets are minimal closed supersets") {
    auto m = z12_module();
    GradedSubmodule s = generate_submodule(m, {{4}});
    // dropping any non-generator element breaks closure
    for (const Elem& drop : s.elements()) {
      if (drop == Elem{4} || drop == Elem{0}) continue;
      std::vector<Elem> rest;
      for (const Elem& x : s.elements())
        if (x != drop) rest.push_back(x);
      CHECK_THROWS_AS(GradedSubmodule::from_elements(m, rest), structural_error);
    }
  }
}

TEST_CASE("intersection") {
  auto m = z12_module();
  GradedSubmodule a = generate_submodule(m, {{4}});
  GradedSubmodule b = generate_submodule(m, {{6}});
  GradedSubmodule c = generate_submodule(m, {{2}});
  GradedSubmodule d = generate_submodule(m, {{3}});
  CHECK(intersect(a, a).same_set(a));
  CHECK(intersect(a, b).elements() == std::vector<Elem>{{0}});
  CHECK(intersect(c, d).elements() == std::vector<Elem>{{0}, {6}});
  CHECK(is_graded_submodule(*m, intersect(c, d).elements()).ok());
}

TEST_CASE("colon_ring") {
  SUBCASE("zero submodule of the mixed module") {
    auto m = mixed_module();
    GradedSubmodule c = GradedSubmodule::zero(m);
    GradedSubmodule colon = colon_ring(c);
    CHECK(colon.elements() == std::vector<Elem>{{0}});
    CHECK_FALSE(colon.exact());  // the ring carrier is infinite
    CHECK(is_graded_submodule(*colon.parent(), colon.elements()).ok());
  }
  SUBCASE("zero submodule of Z6 over Z gives 6Z, box-truncated") {
    auto m = torsion_module();
    GradedSubmodule c = GradedSubmodule::zero(m);
    GradedSubmodule colon = colon_ring(c);
    CHECK(colon.elements() == std::vector<Elem>{{0}, {6}, {-6}});
    CHECK_FALSE(colon.exact());
    // semantic membership still decides any integer exactly
    CHECK(colon_ring_contains(c, {12}) == Mem::yes);
    CHECK(colon_ring_contains(c, {13}) == Mem::no);
  }
  SUBCASE("whole module gives the whole ring") {
    auto m = z12_module();
    GradedSubmodule colon = colon_ring(GradedSubmodule::whole(m));
    CHECK(colon.size() == 12);
    CHECK(colon.exact());
  }
}

TEST_CASE("colon_module") {
  auto m = torsion_module();
  GradedSubmodule zero = GradedSubmodule::zero(m);
  CHECK(colon_module(zero, Elem{2}).elements() == std::vector<Elem>{{0}, {3}});
  CHECK(colon_module(zero, Elem{6}).size() == 6);
  // (C : 1) = C across the Z12 lattice
  auto zm = z12_module();
  for (const GradedSubmodule& c : enumerate_graded_submodules(zm))
    CHECK(colon_module(c, Elem{1}).same_set(c));
  // ideal divisor
  GradedSubmodule two = generate_submodule(zm, {{2}});
  GradedSubmodule c0 = GradedSubmodule::zero(zm);
  CHECK(colon_module(c0, two).elements() == std::vector<Elem>{{0}, {6}});
}

TEST_CASE("ideal components under the trivial and group-algebra gradings") {
  auto zm = z12_module();
  GradedSubmodule i = generate_submodule(zm, {{4}});
  CHECK(ideal_component(i, {0}) == std::vector<Elem>{{0}, {4}, {8}});
  CHECK(ideal_component(i, {1}) == std::vector<Elem>{{0}});

  auto ga = GradedModule::ring_as_module(GradedRing::group_algebra(2, GradingGroup({2})));
  GradedSubmodule t = generate_submodule(ga, {{0, 1}});
  CHECK(t.component({1}).size() == 2);  // {0, t}
}

TEST_CASE("graded submodule lattice") {
  // oracle: the subgroup lattice of Z_n has one subgroup per divisor
  auto z6 = GradedModule::ring_as_module(GradedRing::modular(6, GradingGroup({2})));
  CHECK(enumerate_graded_submodules(z6).size() == 4);
  auto z12 = z12_module();
  CHECK(enumerate_graded_submodules(z12).size() == 6);
  // homogeneous units make {0} and R the only graded ideals of Z2[Z2]
  auto ga = GradedModule::ring_as_module(GradedRing::group_algebra(2, GradingGroup({2})));
  CHECK(enumerate_graded_submodules(ga).size() == 2);
  for (const GradedSubmodule& s : enumerate_graded_submodules(z12))
    CHECK(is_graded_submodule(*z12, s.elements()).ok());
}
