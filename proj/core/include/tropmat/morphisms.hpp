#pragma once

#include <vector>

#include "tropmat/bool_linear.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/tropical_space.hpp"

namespace tropmat {

// A map of pointed ground sets E u {*} -> F u {*}; images[i-1] is the image
// of element i, with 0 standing for the distinguished point.
struct PointedMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> images;

  bool operator==(const PointedMap&) const = default;
};

PointedMap identity_pointed(int n);
PointedMap compose(const PointedMap& g, const PointedMap& f);  // g after f

// A set-valued map E -> 2^F; images[i-1] is the image mask (may be empty).
struct MultiMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<Mask> images;

  bool operator==(const MultiMap&) const = default;
};

// The linear map carrying the i-th generator to the image generator (or zero).
BLinearMap induced_map(const PointedMap& f);

// All three characterizations of strength are evaluated and must agree:
// flat preimages, descent on flat quotients, and the dual inclusion of
// tropical linear spaces.
bool is_strong_map(const PointedMap& f, const Matroid& m, const Matroid& n);

// N is a quotient of M: L_N inside L_M (identity ground map strong).
bool is_quotient(const Matroid& m, const Matroid& n);
bool is_flag(const std::vector<Matroid>& ms);

// A matroid P on E u T with delete(P,T) = M and contract(P,T) = N, T the
// trailing rank(M)-rank(N) elements. Built from a candidate rank function
// (validated against the rank axioms) with exhaustive search as fallback.
Matroid factorization_witness(const Matroid& m, const Matroid& n);

// L_P for the witness above, with the two restriction/projection identities
// asserted: L_N = L_P intersect B^E and L_M = pi_E(L_P).
TropicalLinearSpace tls_factorization_witness(const Matroid& m, const Matroid& n);

BLinearMap multimap_to_linear(const MultiMap& f);
MultiMap linear_to_multimap(const BLinearMap& phi);

// Preimage {i : f(i) inside F} of every flat F is a flat; asserted to agree
// with the linear-map descent criterion.
bool is_multivalued_strong(const MultiMap& f, const Matroid& m, const Matroid& n);

// phi : (B^E)^v -> (B^F)^v descends to Q_M -> Q_N; asserted to agree with
// dual_map(phi) carrying L_N into L_M.
bool is_c_morphism(const BLinearMap& phi, const Matroid& m, const Matroid& n);

// Objects of the category of quotient presentations are carried by matroids;
// comparison is on the nose (equal congruences, i.e. equal flat families).
struct CObject {
  Matroid matroid;
};

CObject iota(const Matroid& m);
CObject object_direct_sum(const CObject& a, const CObject& b);

// Q_M (+) Q_N equals the flat quotient of M (+) N: closure splits over the
// two blocks, and the product lattice is isomorphic to the flat lattice.
bool verify_iota_sum(const Matroid& m, const Matroid& n);

// No nontrivial bipartition splits the closure operator; asserted equal to
// matroid connectivity.
bool is_indecomposable(const Matroid& m);

// Hom(Q_M, B) as an explicit module of coordinate masks; asserted
// lattice-isomorphic to L_M. Masks are returned via `carriers`.
FiniteBModule hom_to_unit(const Matroid& m, std::vector<Mask>* carriers = nullptr);

}  // namespace tropmat
