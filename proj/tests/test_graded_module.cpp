#include "doctest.h"

#include "gabs/graded_module.hpp"

using namespace gabs;

namespace {

// M = Z x Z_6 over Z, free part in degree 0, torsion part in degree 1
GradedModule::Ptr mixed_module() {
  auto ring = GradedRing::integers(GradingGroup({0}));
  return GradedModule::cyclic_product(ring, {0, 6},
                                      GradingSpec::by_coordinate({{0}, {1}}));
}

// M = Z_6 over Z, concentrated in degree 0 of Z_2
GradedModule::Ptr torsion_module() {
  auto ring = GradedRing::integers(GradingGroup({2}));
  return GradedModule::cyclic_product(ring, {6}, GradingSpec::by_coordinate({{0}}));
}

}  // namespace

TEST_CASE("mixed free/torsion module validates (bounded)") {
  auto m = mixed_module();
  CHECK_FALSE(m->finite());
  CheckOutcome o = validate_graded_module(*m);
  CHECK(o.verdict == Verdict::bounded_holds);
  CHECK(o.bound == 10);
  CHECK(m->act({5}, {2, 5}) == Elem{10, 1});
}

TEST_CASE("finite module over the integer ring validates exactly") {
  auto m = torsion_module();
  CHECK(m->finite());
  CHECK(scalar_box_complete(*m));
  CHECK(validate_graded_module(*m).verdict == Verdict::holds);
}

TEST_CASE("ring_as_module of a validated ring validates") {
  for (auto ring : {GradedRing::modular(12, GradingGroup({2})),
                    GradedRing::group_algebra(3, GradingGroup({2}))}) {
    auto m = GradedModule::ring_as_module(ring);
    CHECK(validate_graded_module(*m).verdict == Verdict::holds);
  }
}

TEST_CASE("homogeneous components") {
  SUBCASE("group algebra element splits into its degree parts") {
    auto r = GradedRing::group_algebra(2, GradingGroup({2}));
    auto m = GradedModule::ring_as_module(r);
    // oracle: search the 4-element decomposition table directly
    std::map<Degree, Elem> parts = homogeneous_components({1, 1}, *m);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at({0}) == Elem{1, 0});
    CHECK(parts.at({1}) == Elem{0, 1});
  }
  SUBCASE("coordinate projection in the mixed module") {
    auto m = mixed_module();
    std::map<Degree, Elem> parts = homogeneous_components({5, 4}, *m);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at({0}) == Elem{5, 0});
    CHECK(parts.at({1}) == Elem{0, 4});
  }
  SUBCASE("zero has the empty decomposition") {
    auto m = mixed_module();
    CHECK(homogeneous_components({0, 0}, *m).empty());
  }
}

TEST_CASE("decomposition sums back to the element") {
  auto ring = GradedRing::group_algebra(3, GradingGroup({2}));
  auto m = GradedModule::ring_as_module(ring);
  for (const Elem& x : m->elements()) {
    Elem sum = m->zero();
    for (const auto& [d, part] : homogeneous_components(x, *m)) {
      CHECK(m->component_contains(d, part) == Mem::yes);
      sum = m->add(sum, part);
    }
    CHECK(sum == x);
  }
}

TEST_CASE("ill-defined integer-like action is rejected") {
  auto ring = GradedRing::modular(6, GradingGroup({2}));
  CHECK_THROWS_AS(GradedModule::cyclic_product(ring, {4}, GradingSpec::trivial()),
                  structural_error);
  CHECK_NOTHROW(GradedModule::cyclic_product(ring, {3}, GradingSpec::trivial()));
  // infinite coordinate over a finite ring is ill-defined as well
  CHECK_THROWS_AS(GradedModule::cyclic_product(ring, {0}, GradingSpec::trivial()),
                  structural_error);
}
