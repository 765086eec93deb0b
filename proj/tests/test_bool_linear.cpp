#include <algorithm>

#include "doctest.h"
#include "tropmat/bool_linear.hpp"

using namespace tropmat;

TEST_CASE("linear maps act by column joins") {
  const BLinearMap id = identity_map(3);
  CHECK(apply(id, mask_of({1, 3})) == mask_of({1, 3}));
  const BLinearMap phi{2, 3, {mask_of({1, 2}), mask_of({3})}};
  CHECK(apply(phi, mask_of({1, 2})) == mask_of({1, 2, 3}));
  CHECK(apply(phi, Mask{0}) == 0);
  const BLinearMap psi = dual_map(phi);
  CHECK(psi.source_n == 3);
  CHECK(psi.col == std::vector<Mask>{mask_of({1}), mask_of({1}), mask_of({2})});
  CHECK(dual_map(psi) == phi);
}

TEST_CASE("permanent by matching") {
  CHECK(permanent(BMatrix{2, 2, {mask_of({1}), mask_of({2})}}));
  CHECK(permanent(BMatrix{2, 2, {mask_of({1, 2}), mask_of({1})}}));
  CHECK_FALSE(permanent(BMatrix{2, 2, {mask_of({1}), mask_of({1})}}));
  CHECK(permanent(BMatrix{0, 0, {}}));  // empty product is 1
}

TEST_CASE("tropical kernel membership") {
  const BVector f{3, mask_of({1, 2})};
  CHECK(tropical_kernel_membership(f, BVector{3, 0}));
  CHECK(tropical_kernel_membership(f, BVector{3, mask_of({1, 2})}));
  CHECK(tropical_kernel_membership(f, BVector{3, mask_of({3})}));
  CHECK_FALSE(tropical_kernel_membership(f, BVector{3, mask_of({1, 3})}));
}

TEST_CASE("surjectivity means unit columns") {
  CHECK(is_surjective(identity_map(2)));
  CHECK(is_surjective(BLinearMap{3, 2, {mask_of({1}), mask_of({1, 2}), mask_of({2})}}));
  CHECK_FALSE(is_surjective(BLinearMap{2, 2, {mask_of({1, 2}), mask_of({1})}}));
}

TEST_CASE("bend congruence of a single form") {
  // The form x_1 + x_2 on B^2 identifies {1}, {2}, {1,2}.
  const QuotientModule q = bend_congruence(2, {mask_of({1, 2})});
  CHECK(q.class_count() == 2);
  CHECK(q.congruent(mask_of({1}), mask_of({2})));
  CHECK(q.congruent(mask_of({1}), mask_of({1, 2})));
  CHECK_FALSE(q.congruent(0, mask_of({1})));
  CHECK(q.canonical(mask_of({1})) == mask_of({1, 2}));
  CHECK(q.canonical_forms() == std::vector<Mask>{0, mask_of({1, 2})});
}

TEST_CASE("congruence closure respects translation") {
  // Identifying e1 ~ e2 identifies their joins with anything.
  const QuotientModule q =
      congruence_closure(3, {{mask_of({1}), mask_of({2})}});
  CHECK(q.congruent(mask_of({1, 3}), mask_of({2, 3})));
  CHECK(q.congruent(mask_of({1}), mask_of({1, 2})));
  CHECK_FALSE(q.congruent(mask_of({3}), mask_of({1, 3})));
}

TEST_CASE("hom sets and lattice isomorphism") {
  const FiniteBModule free2 = module_from_masks({0, 1, 2, 3});
  const FiniteBModuleHomSet hs = hom_set(free2);
  CHECK(hs.homs.size() == 4);  // zero, two coordinates, their join
  CHECK(homs_separate_points(hs));
  CHECK(lattice_isomorphic(free2, hs.module));

  const FiniteBModule chain = module_from_masks({0, 1, 3});
  CHECK_FALSE(lattice_isomorphic(free2, chain));
  CHECK(lattice_isomorphic(chain, module_from_masks({0, 2, 3})));
}

TEST_CASE("module from quotient") {
  const QuotientModule q = bend_congruence(2, {mask_of({1, 2})});
  const FiniteBModule m = module_from_quotient(q);
  CHECK(m.size == 2);
  CHECK(m.join(0, 1) == m.join(1, 1));
}
