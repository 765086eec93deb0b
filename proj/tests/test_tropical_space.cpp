#include <algorithm>

#include "doctest.h"
#include "tropmat/matroid.hpp"
#include "tropmat/tropical_space.hpp"

using namespace tropmat;

TEST_CASE("tropical linear space of U_{2,3}") {
  const TropicalLinearSpace l = tls_of(uniform_matroid(2, 3));
  CHECK(l.generators() == std::vector<Mask>{mask_of({1, 2}), mask_of({1, 3}),
                                            mask_of({2, 3})});
  // Elements are the complements of the five flats.
  CHECK(l.elements() == std::vector<Mask>{0, mask_of({1, 2}), mask_of({1, 3}),
                                          mask_of({2, 3}), mask_of({1, 2, 3})});
  CHECK(l.contains(0));
  CHECK(l.contains(mask_of({1, 2})));
  CHECK_FALSE(l.contains(mask_of({1})));
  CHECK(tls_contains(l, BVector{3, mask_of({2, 3})}));
  CHECK_FALSE(tls_contains(l, BVector{3, mask_of({3})}));
}

TEST_CASE("flat quotient canonical forms") {
  const FlatQuotient q = flat_quotient_of(uniform_matroid(2, 3), true);
  CHECK(q.canonical(mask_of({1, 2})) == mask_of({1, 2, 3}));
  CHECK(q.canonical(mask_of({1})) == mask_of({1}));
  CHECK(q.congruent(mask_of({1, 2}), mask_of({1, 3})));
  CHECK_FALSE(q.congruent(mask_of({1}), mask_of({2})));
  CHECK(q.canonical_forms().size() == 5);
  CHECK(q.as_module().size == 5);
}

TEST_CASE("duality between L and Q") {
  CHECK(duality_check(uniform_matroid(2, 3)));
  CHECK(duality_check(uniform_matroid(0, 0)));
  CHECK(duality_check(Matroid::from_bases(3, {mask_of({1, 2})})));
}

TEST_CASE("coordinate restriction and projection") {
  const TropicalLinearSpace l = tls_of(uniform_matroid(2, 3));
  // Contracting element 3 leaves U_{1,2}: elements 0, {1,2}.
  CHECK(tls_intersect_coordinate(l, mask_of({3})) ==
        std::vector<Mask>{0, mask_of({1, 2})});
  // Deleting element 3 leaves U_{2,2}: all of B^2.
  auto proj = tls_project(l, mask_of({3}));
  std::sort(proj.begin(), proj.end());
  CHECK(proj == std::vector<Mask>{0, mask_of({1}), mask_of({2}), mask_of({1, 2})});
}

TEST_CASE("sufficiently disjoint pairs") {
  const Matroid u13 = uniform_matroid(1, 3);
  CHECK(sufficiently_disjoint(u13, u13));
  CHECK(sufficiently_disjoint_fast(u13, u13));
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK_FALSE(sufficiently_disjoint(u23, u23));
  CHECK(sufficiently_disjoint(u23, uniform_matroid(0, 3)));
  CHECK_THROWS_AS(sufficiently_disjoint(u23, uniform_matroid(1, 2)),
                  GroundSetMismatchError);
}

TEST_CASE("stable sum") {
  const Matroid u13 = uniform_matroid(1, 3);
  CHECK(stable_sum(u13, u13).matroid() == uniform_matroid(2, 3));
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK_THROWS_AS(stable_sum(u23, u23), NotSufficientlyMoveableError);
}

TEST_CASE("monotonicity of the stable sum") {
  const Matroid p = uniform_matroid(1, 3);
  const Matroid m = uniform_matroid(1, 3);
  const Matroid n = uniform_matroid(2, 3);
  REQUIRE(tls_subset(tls_of(m), tls_of(n)));
  const MonotonicityReport rep = verify_monotonicity(p, m, n);
  CHECK(rep.disjoint_with_smaller);
  CHECK(rep.inclusion);
  // Hypotheses not met: L_M is not inside L_N when M = U_{2,3}, N = U_{1,3}.
  CHECK_THROWS_AS(verify_monotonicity(p, n, m), PreconditionUnmetError);
}

TEST_CASE("tls subset equals flat-family containment") {
  const TropicalLinearSpace l13 = tls_of(uniform_matroid(1, 3));
  const TropicalLinearSpace l23 = tls_of(uniform_matroid(2, 3));
  CHECK(tls_subset(l13, l23));
  CHECK_FALSE(tls_subset(l23, l13));
}

TEST_CASE("minor identities for the stable sum") {
  // M = U_{1,2} on E = {1,2}; N = U_{2,3} on E plus one trailing element.
  const MinorStableSumReport rep =
      verify_minor_stable_sum(uniform_matroid(1, 2), uniform_matroid(2, 3));
  CHECK((rep.contraction_applicable ? rep.contraction_identity : true));
  CHECK((rep.deletion_applicable ? rep.deletion_identity : true));
  CHECK_THROWS_AS(
      verify_minor_stable_sum(uniform_matroid(1, 3), uniform_matroid(1, 2)),
      GroundSetMismatchError);
}
