#include <algorithm>

#include "doctest.h"
#include "tropmat/matroid.hpp"
#include "tropmat/morphisms.hpp"
#include "tropmat/tropical_space.hpp"

using namespace tropmat;

TEST_CASE("pointed map composition") {
  const PointedMap f{3, 2, {1, 2, 0}};
  const PointedMap g{2, 2, {2, 2}};
  const PointedMap gf = compose(g, f);
  CHECK(gf.images == std::vector<int>{2, 2, 0});
  CHECK(compose(identity_pointed(2), f) == f);
  CHECK(compose(f, identity_pointed(3)) == f);
}

TEST_CASE("induced linear map") {
  const BLinearMap phi = induced_map(PointedMap{3, 2, {1, 2, 0}});
  CHECK(phi.col == std::vector<Mask>{mask_of({1}), mask_of({2}), 0});
  CHECK(apply(phi, mask_of({1, 3})) == mask_of({1}));
}

TEST_CASE("strong maps") {
  const Matroid u23 = uniform_matroid(2, 3);
  const Matroid u13 = uniform_matroid(1, 3);
  // The identity is strong from M to a quotient of M.
  CHECK(is_strong_map(identity_pointed(3), u23, u13));
  CHECK_FALSE(is_strong_map(identity_pointed(3), u13, u23));
  // Collapsing everything to the point is always strong.
  CHECK(is_strong_map(PointedMap{3, 3, {0, 0, 0}}, u23, u13));
  CHECK(is_quotient(u23, u13));
  CHECK_FALSE(is_quotient(u13, u23));
  CHECK(is_quotient(u23, u23));
  CHECK(is_flag({uniform_matroid(3, 4), uniform_matroid(2, 4),
                 uniform_matroid(1, 4)}));
  CHECK_FALSE(is_flag({u13, u23}));
}

TEST_CASE("quotient factorization through one extra element") {
  const Matroid u23 = uniform_matroid(2, 3);
  const Matroid u13 = uniform_matroid(1, 3);
  const Matroid p = factorization_witness(u23, u13);
  CHECK(p == uniform_matroid(2, 4));
  CHECK(delete_elements(p, mask_of({4})).minor == u23);
  CHECK(contract_elements(p, mask_of({4})).minor == u13);
  // Equal ranks force P = M = N.
  CHECK(factorization_witness(u23, u23) == u23);
  CHECK_THROWS_AS(factorization_witness(u13, u23), NotAQuotientError);

  const TropicalLinearSpace lp = tls_factorization_witness(u23, u13);
  CHECK(lp.n() == 4);
}

TEST_CASE("multivalued maps") {
  const MultiMap f{3, 3, {mask_of({1}), mask_of({2}), mask_of({3})}};
  const BLinearMap phi = multimap_to_linear(f);
  CHECK(linear_to_multimap(phi) == f);
  const Matroid u23 = uniform_matroid(2, 3);
  const Matroid u13 = uniform_matroid(1, 3);
  CHECK(is_multivalued_strong(f, u23, u13));
  CHECK_FALSE(is_multivalued_strong(f, u13, u23));
  CHECK(is_c_morphism(phi, u23, u13));
  // The empty-valued map is the zero morphism, always strong.
  CHECK(is_multivalued_strong(MultiMap{3, 3, {0, 0, 0}}, u13, u23));
}

TEST_CASE("objects and direct sums") {
  const Matroid u11 = uniform_matroid(1, 1);
  const Matroid u12 = uniform_matroid(1, 2);
  CHECK(iota(u11).matroid == u11);
  CHECK(object_direct_sum(iota(u11), iota(u12)).matroid == direct_sum(u11, u12));
  CHECK(verify_iota_sum(u11, u12));
  CHECK(verify_iota_sum(uniform_matroid(2, 3), u12));
  CHECK(verify_iota_sum(uniform_matroid(0, 0), u11));
}

TEST_CASE("indecomposability equals connectivity") {
  CHECK(is_indecomposable(uniform_matroid(2, 3)));
  CHECK_FALSE(is_indecomposable(direct_sum(uniform_matroid(1, 1),
                                           uniform_matroid(1, 1))));
  CHECK(is_indecomposable(uniform_matroid(1, 1)));
}

TEST_CASE("homs to the unit module recover L") {
  std::vector<Mask> carriers;
  const FiniteBModule h = hom_to_unit(uniform_matroid(2, 3), &carriers);
  CHECK(h.size == 5);
  std::sort(carriers.begin(), carriers.end());
  CHECK(carriers == tls_of(uniform_matroid(2, 3)).elements());
  CHECK(lattice_isomorphic(h, tls_module(tls_of(uniform_matroid(2, 3)))));
}
