#include <set>

#include "doctest.h"
#include "tropmat/catalog.hpp"
#include "tropmat/matroid.hpp"

using namespace tropmat;

TEST_CASE("labeled matroid counts, small ground sets") {
  CHECK(enumerate_matroids(0).size() == 1);
  CHECK(enumerate_matroids(1).size() == 2);
  CHECK(enumerate_matroids(2).size() == 5);
  CHECK(enumerate_matroids(3).size() == 16);
  CHECK(enumerate_matroids(4).size() == 68);
  CHECK(catalog_slice(5).size() == 406);
}

TEST_CASE("labeled matroid count, six elements") {
  CHECK(catalog_slice(6).size() == 3807);
}

TEST_CASE("slices are deterministic, sorted, duplicate-free") {
  const auto& s = catalog_slice(4);
  std::set<std::pair<int, std::vector<Mask>>> seen;
  for (const Matroid& m : s) {
    CHECK(m.n() == 4);
    CHECK(seen.emplace(m.rank(), m.bases()).second);
  }
  CHECK(catalog_slice(4) == enumerate_matroids(4));
}

TEST_CASE("build_catalog assembles slices") {
  const Catalog c = build_catalog(3);
  REQUIRE(c.by_n.size() == 4);
  CHECK(c.exhaustive);
  CHECK(c.by_n[3].size() == 16);
}

TEST_CASE("named matroids") {
  CHECK(graphic_matroid_c4() == uniform_matroid(3, 4));
  const Matroid k4 = graphic_matroid_k4();
  CHECK(k4.n() == 6);
  CHECK(k4.rank() == 3);
  CHECK(k4.bases().size() == 16);  // spanning trees of K4
  CHECK(is_connected(k4));
}

TEST_CASE("curated slices beyond the exhaustive range") {
  for (int n : {7, 8}) {
    const auto ms = curated_matroids(n);
    CHECK(ms.size() >= 8);
    for (const Matroid& m : ms)
      CHECK(m == Matroid::from_bases(m.n(), m.bases()));
  }
}
