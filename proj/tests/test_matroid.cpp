#include <algorithm>

#include "doctest.h"
#include "tropmat/matroid.hpp"

using namespace tropmat;

TEST_CASE("basis family validation") {
  CHECK_THROWS_AS(Matroid::from_bases(3, {}), EmptyBasesError);
  CHECK_THROWS_AS(Matroid::from_bases(3, {mask_of({1, 2}), mask_of({3})}),
                  MixedCardinalityError);
  // {12, 34} violates exchange on n=4.
  CHECK_THROWS_AS(Matroid::from_bases(4, {mask_of({1, 2}), mask_of({3, 4})}),
                  ExchangeFailureError);
  CHECK_NOTHROW(Matroid::from_bases(3, {mask_of({1, 2}), mask_of({1, 3}),
                                        mask_of({2, 3})}));
}

TEST_CASE("uniform matroid invariants") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(u23.n() == 3);
  CHECK(u23.rank() == 2);
  CHECK(u23.bases().size() == 3);
  CHECK(rank_of(u23, mask_of({1})) == 1);
  CHECK(rank_of(u23, mask_of({1, 2, 3})) == 2);
  CHECK(is_independent(u23, mask_of({1, 3})));
  CHECK_FALSE(is_independent(u23, mask_of({1, 2, 3})));
  CHECK(closure_of(u23, 0) == 0);
  CHECK(closure_of(u23, mask_of({1})) == mask_of({1}));
  CHECK(closure_of(u23, mask_of({1, 2})) == mask_of({1, 2, 3}));

  const Matroid empty = uniform_matroid(0, 0);
  CHECK(empty.rank() == 0);
  CHECK(empty.bases() == std::vector<Mask>{0});
}

TEST_CASE("circuits, cocircuits, flats of U_{2,3}") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(circuits(u23) == std::vector<Mask>{mask_of({1, 2, 3})});
  CHECK(cocircuits(u23) == std::vector<Mask>{mask_of({1, 2}), mask_of({1, 3}),
                                             mask_of({2, 3})});
  const auto fl = flats(u23);
  CHECK(fl == std::vector<Mask>{0, mask_of({1}), mask_of({2}), mask_of({3}),
                                mask_of({1, 2, 3})});
}

TEST_CASE("duality") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(dual(u23) == uniform_matroid(1, 3));
  CHECK(dual(dual(u23)) == u23);
  // A loop in M is a coloop in the dual.
  const Matroid with_loop = Matroid::from_bases(2, {mask_of({1})});
  CHECK(dual(with_loop) == Matroid::from_bases(2, {mask_of({2})}));
}

TEST_CASE("minors keep labels") {
  const Matroid u24 = uniform_matroid(2, 4);
  const MinorResult del = delete_elements(u24, mask_of({2}));
  CHECK(del.minor == uniform_matroid(2, 3));
  CHECK(del.labels == std::vector<int>{1, 3, 4});
  const MinorResult con = contract_elements(u24, mask_of({4}));
  CHECK(con.minor == uniform_matroid(1, 3));
  CHECK(con.kept == mask_of({1, 2, 3}));
  CHECK(restriction(u24, mask_of({1, 3})).minor == uniform_matroid(2, 2));
}

TEST_CASE("rank table matches rank_of") {
  const Matroid u24 = uniform_matroid(2, 4);
  const auto rt = rank_table(u24);
  REQUIRE(rt.size() == 16);
  for (Mask x = 0; x < 16; ++x) CHECK(rt[x] == rank_of(u24, x));
}

TEST_CASE("direct sum and connectivity") {
  const Matroid u11 = uniform_matroid(1, 1);
  const Matroid s = direct_sum(u11, uniform_matroid(1, 2));
  CHECK(s.n() == 3);
  CHECK(s.rank() == 2);
  CHECK(s.bases() == std::vector<Mask>{mask_of({1, 2}), mask_of({1, 3})});
  CHECK_FALSE(is_connected(s));
  CHECK(components(s) == std::vector<Mask>{mask_of({1}), mask_of({2, 3})});
  CHECK(is_connected(uniform_matroid(2, 3)));
  // A single coloop counts as connected, and a loop is its own component.
  CHECK(is_connected(uniform_matroid(1, 1)));
  CHECK(components(uniform_matroid(0, 2)) ==
        std::vector<Mask>{mask_of({1}), mask_of({2})});
}

TEST_CASE("matroid union") {
  const Matroid u13 = uniform_matroid(1, 3);
  const Matroid u = matroid_union(u13, u13);
  CHECK(u == uniform_matroid(2, 3));
  for (Mask x = 0; x < 8; ++x)
    CHECK(rank_of(u, x) == matroid_union_rank_oracle(u13, u13, x));
}

TEST_CASE("truncation and simplification") {
  CHECK(truncation(uniform_matroid(3, 4), 2) == uniform_matroid(2, 4));
  CHECK(truncation(uniform_matroid(3, 4), 3) == uniform_matroid(3, 4));
  const Matroid with_loop = Matroid::from_bases(3, {mask_of({1, 2})});
  CHECK(simplify(with_loop).n() == 2);
}

TEST_CASE("transversal matroid of a set system") {
  const SetSystem s{3, {mask_of({1, 2}), mask_of({2, 3})}};
  CHECK(transversal_matroid(s) == uniform_matroid(2, 3));
  CHECK(has_transversal_matching(s, mask_of({1, 3})));
  CHECK_FALSE(has_transversal_matching(s, mask_of({1, 2, 3})));
  // Empty sets contribute nothing.
  const SetSystem t{2, {0, mask_of({1})}};
  CHECK(transversal_matroid(t) == Matroid::from_bases(2, {mask_of({1})}));
}

TEST_CASE("fundamental circuit") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(fundamental_circuit(u23, 3, mask_of({1, 2})) == mask_of({1, 2, 3}));
}
