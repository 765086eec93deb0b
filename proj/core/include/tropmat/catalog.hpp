#pragma once

#include <vector>

#include "tropmat/matroid.hpp"

namespace tropmat {

// All labeled matroids on {1..n}, every rank, deterministically ordered.
// Exhaustive slices (n <= 6) are produced by two independent strategies --
// filtering every basis family and extending by one element along modular
// cuts -- which must agree exactly.
std::vector<Matroid> enumerate_matroids(int n);

struct Catalog {
  int max_n = 0;
  bool exhaustive = true;
  std::vector<std::vector<Matroid>> by_n;  // index = ground size
};

Catalog build_catalog(int max_n);

// Cached access to one exhaustive slice.
const std::vector<Matroid>& catalog_slice(int n);

// Hand-picked families beyond the exhaustive range (n = 7, 8): uniforms,
// direct sums, graphic matroids, transversal matroids of fixed set systems.
std::vector<Matroid> curated_matroids(int n);

Matroid graphic_matroid_c4();  // the 4-cycle: U_{3,4}
Matroid graphic_matroid_k4();  // 16 spanning trees on 6 edges

}  // namespace tropmat
