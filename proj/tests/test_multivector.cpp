#include "doctest.h"
#include "tropmat/matroid.hpp"
#include "tropmat/multivector.hpp"

using namespace tropmat;

TEST_CASE("wedge has no signs and kills repeats") {
  const Multivector e1 = multivector(3, 1, {mask_of({1})});
  const Multivector e2 = multivector(3, 1, {mask_of({2})});
  const Multivector w = wedge(e1, e2);
  CHECK(w.degree == 2);
  CHECK(w.terms == std::vector<Mask>{mask_of({1, 2})});
  CHECK(wedge(e1, e1).is_zero());

  const Multivector u = add(e1, e2);
  const Multivector e3 = multivector(3, 1, {mask_of({3})});
  CHECK(wedge(u, e3).terms ==
        std::vector<Mask>{mask_of({1, 3}), mask_of({2, 3})});
  CHECK(wedge(unit_multivector(3), e1) == e1);
}

TEST_CASE("indicator and plucker validity") {
  const Matroid u23 = uniform_matroid(2, 3);
  const Multivector v = indicator(u23);
  CHECK(v.terms == u23.bases());
  CHECK(is_plucker(v));
  CHECK(matroid_from_plucker(v) == u23);

  CHECK_FALSE(is_plucker(multivector(4, 2, {mask_of({1, 2}), mask_of({3, 4})})));
  CHECK_THROWS_AS(matroid_from_plucker(multivector(3, 1, {})),
                  ZeroMultivectorError);
}

TEST_CASE("one-element decomposition") {
  const Multivector v = indicator(uniform_matroid(2, 3));
  const auto [w, wp] = decompose_by_element(v, 3);
  CHECK(w.terms == std::vector<Mask>{mask_of({1}), mask_of({2})});
  CHECK(wp.terms == std::vector<Mask>{mask_of({1, 2})});
  // Coloop: every basis of U_{1,1} contains element 1.
  const auto [w1, wp1] = decompose_by_element(indicator(uniform_matroid(1, 1)), 1);
  CHECK_FALSE(w1.is_zero());
  CHECK(wp1.is_zero());
}

TEST_CASE("maximal minors of a 0/1 matrix") {
  const BMatrix a{2, 3, {mask_of({1, 3}), mask_of({2, 3})}};
  const Multivector v = maximal_minors(a);
  CHECK(v == indicator(uniform_matroid(2, 3)));
  const BMatrix wide{3, 2, {mask_of({1}), mask_of({2}), mask_of({1, 2})}};
  CHECK_THROWS_AS(maximal_minors(wide), WideMatrixError);
}

TEST_CASE("independent-set indicators by degree") {
  const auto per_degree = independents_indicator(uniform_matroid(2, 3));
  REQUIRE(per_degree.size() == 3);
  CHECK(per_degree[0].terms == std::vector<Mask>{0});
  CHECK(per_degree[1].terms.size() == 3);
  CHECK(per_degree[2] == indicator(uniform_matroid(2, 3)));
}

TEST_CASE("subset indexing in colex order") {
  const SubsetIndex idx = subset_index(4, 2);
  REQUIRE(idx.subsets.size() == 6);
  CHECK(idx.subsets.front() == mask_of({1, 2}));
  CHECK(idx.subsets.back() == mask_of({3, 4}));
  for (int i = 0; i < 6; ++i) CHECK(idx.index_of(idx.subsets[i]) == i);
}

TEST_CASE("wedge power quotient dimensions") {
  const QuotientModule q = wedge_power_quotient(uniform_matroid(2, 3), 1);
  CHECK(q.n() == 3);
  // Degree 1 recovers the bend congruence of the circuit forms: Q_{U_{2,3}}
  // has the five flats as classes.
  CHECK(q.class_count() == 5);
  CHECK(wedge_power_quotient(uniform_matroid(3, 6), 2).n() == 15);
}
