#include <algorithm>

#include "doctest.h"
#include "tropmat/catalog.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/transversal.hpp"

using namespace tropmat;

TEST_CASE("presentation checking") {
  const Matroid u23 = uniform_matroid(2, 3);
  const BMatrix a{2, 3, {mask_of({1, 3}), mask_of({2, 3})}};
  CHECK(check_presentation(a, u23));
  const BMatrix all_ones{2, 3, {mask_of({1, 2, 3}), mask_of({1, 2, 3})}};
  CHECK(check_presentation(all_ones, u23));
  CHECK_FALSE(check_presentation(a, Matroid::from_bases(3, {mask_of({1, 2})})));
  CHECK_THROWS_AS(check_presentation(a, uniform_matroid(2, 4)),
                  ShapeMismatchError);
}

TEST_CASE("presentation from rows") {
  const auto [v, m] = presentation_from_rows(
      {BVector{3, mask_of({1, 3})}, BVector{3, mask_of({2, 3})}});
  CHECK(m == uniform_matroid(2, 3));
  CHECK(v.terms == m.bases());
  CHECK_THROWS_AS(
      presentation_from_rows({BVector{2, mask_of({1})}, BVector{2, mask_of({1})}}),
      ZeroWedgeError);
}

TEST_CASE("maximal presentation saturates to the fiber maximum") {
  const BMatrix a{2, 3, {mask_of({1, 3}), mask_of({2, 3})}};
  const BMatrix top = maximal_presentation(a);
  CHECK(top.row == std::vector<Mask>{mask_of({1, 2, 3}), mask_of({1, 2, 3})});
  // A matrix already maximal stays put.
  CHECK(maximal_presentation(top) == top);
  // Unit columns of a fundamental presentation cannot grow.
  const BMatrix b{2, 3, {mask_of({1, 3}), mask_of({2, 3})}};
  CHECK(maximal_presentation(b).rows == 2);
}

TEST_CASE("minimal presentations of the uniform fiber") {
  const BMatrix a{2, 3, {mask_of({1, 3}), mask_of({2, 3})}};
  const auto mins = minimal_presentations(a);
  CHECK(mins.size() >= 2);
  for (const BMatrix& b : mins) CHECK(check_presentation(b, uniform_matroid(2, 3)));
}

TEST_CASE("stiefel fiber enumeration") {
  const Multivector v = indicator(uniform_matroid(2, 3));
  const FiberReport rep = stiefel_fiber(v, 2, 3);
  CHECK_FALSE(rep.fiber.empty());
  CHECK(rep.maximal.row ==
        std::vector<Mask>{mask_of({1, 2, 3}), mask_of({1, 2, 3})});
  CHECK(rep.minimals.size() >= 2);
  CHECK_THROWS_AS(stiefel_fiber(multivector(3, 2, {}), 2, 3),
                  ZeroPluckerVectorError);
  // U_{2,4} minus one basis is not realizable by a 2x4 matrix over B... but a
  // non-matroidal support simply has an empty fiber.
  CHECK_THROWS_AS(
      stiefel_fiber(multivector(4, 2, {mask_of({1, 2}), mask_of({3, 4})}), 2, 4),
      EmptyFiberError);
}

TEST_CASE("cyclic flats") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(cyclic_flats(u23) == std::vector<Mask>{0, mask_of({1, 2, 3})});
  // With a loop the bottom flat contains a circuit, so only the loop variants
  // qualify at the bottom.
  const Matroid with_loop = Matroid::from_bases(3, {mask_of({1, 2})});
  const auto cf = cyclic_flats(with_loop);
  CHECK(std::find(cf.begin(), cf.end(), mask_of({3})) != cf.end());
  CHECK(std::find(cf.begin(), cf.end(), Mask{0}) == cf.end());
}

TEST_CASE("fundamental transversal recognition") {
  CHECK(is_fundamental_transversal(uniform_matroid(2, 3)));
  CHECK(is_fundamental_transversal(uniform_matroid(0, 2)));
  CHECK(is_fundamental_transversal(uniform_matroid(3, 3)));
}

TEST_CASE("transversal witnesses") {
  const TransversalWitness w = transversal_witness(uniform_matroid(2, 3));
  REQUIRE(w.transversal);
  REQUIRE(w.rows.size() == 2);
  const Matroid back = transversal_matroid(SetSystem{3, w.rows});
  CHECK(back == uniform_matroid(2, 3));
  CHECK(is_transversal(uniform_matroid(2, 3)));
  CHECK(is_transversal(uniform_matroid(0, 1)));
  // M(K4) is the classical non-transversal example on 6 elements.
  CHECK_FALSE(is_transversal(graphic_matroid_k4()));
}
