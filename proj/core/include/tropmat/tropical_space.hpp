#pragma once

#include <string>
#include <vector>

#include "tropmat/bool_linear.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/multivector.hpp"

namespace tropmat {

// The submodule of B^E spanned by cocircuit indicator vectors, represented
// intensionally: membership is "the complement of the support is a flat".
// Elements are enumerated only on demand.
class TropicalLinearSpace {
 public:
  explicit TropicalLinearSpace(Matroid m);

  int n() const { return matroid_.n(); }
  int dim() const { return matroid_.rank(); }  // rank of the source matroid
  const Matroid& matroid() const { return matroid_; }
  const std::vector<Mask>& generators() const { return generators_; }

  bool contains(Mask v) const;
  std::vector<Mask> elements() const;  // complements of flats, sorted

 private:
  Matroid matroid_;
  std::vector<Mask> generators_;  // cocircuit indicators
};

TropicalLinearSpace tls_of(const Matroid& m);

// Membership with the dual route asserted: v in tropker(-^[M]) iff no circuit
// meets supp(v) in exactly one element. Disagreement is a bug sentinel.
bool tls_contains(const TropicalLinearSpace& l, const BVector& v);

// The quotient of the dual free module by the bend relations of the circuit
// forms; canonical forms are exactly the flats, realized by S -> cl(S).
class FlatQuotient {
 public:
  explicit FlatQuotient(Matroid m);
  const Matroid& matroid() const { return matroid_; }
  Mask canonical(Mask s) const { return closure_of(matroid_, s); }
  bool congruent(Mask a, Mask b) const { return canonical(a) == canonical(b); }
  std::vector<Mask> canonical_forms() const { return flats(matroid_); }
  FiniteBModule as_module() const;

 private:
  Matroid matroid_;
};

// For n within the congruence budget the closure route is cross-computed via
// bend_congruence of the circuit forms and asserted identical.
FlatQuotient flat_quotient_of(const Matroid& m, bool cross_check = false);

FiniteBModule tls_module(const TropicalLinearSpace& l);

// hom_set(L_M) lattice-isomorphic to Q_M and hom_set(Q_M) to L_M.
bool duality_check(const Matroid& m);

// Elements of L supported away from T, in compacted coordinates on E-T.
std::vector<Mask> tls_intersect_coordinate(const TropicalLinearSpace& l, Mask t);
// Additive closure of generator images under coordinate deletion, compacted.
std::vector<Mask> tls_project(const TropicalLinearSpace& l, Mask t);

// Disjoint basis pair existence, with the rank and wedge characterizations
// asserted to agree.
bool sufficiently_disjoint(const Matroid& m, const Matroid& n);
bool sufficiently_disjoint_fast(const Matroid& m, const Matroid& n);

// L of matroid_from_plucker([M]^[N]); asserted equal to tls_of(M v N).
TropicalLinearSpace stable_sum(const Matroid& m, const Matroid& n);

struct MinorStableSumReport {
  bool contraction_applicable = false;  // part (a) hypotheses
  bool contraction_identity = false;
  bool deletion_applicable = false;     // part (b) hypotheses
  bool deletion_identity = false;
};

// M on E, N on E+T (T = trailing elements of N's ground set).
MinorStableSumReport verify_minor_stable_sum(const Matroid& m, const Matroid& n);

struct MonotonicityReport {
  bool disjoint_with_smaller = false;
  bool inclusion = false;
};

// Requires L_M within L_N and sufficiently_disjoint(P, N); failures of the
// conclusions are theorem violations, i.e. implementation bugs.
MonotonicityReport verify_monotonicity(const Matroid& p, const Matroid& m,
                                       const Matroid& n);

// L_M within L_N, equivalently flats(M) within flats(N) as families.
bool tls_subset(const TropicalLinearSpace& a, const TropicalLinearSpace& b);

}  // namespace tropmat
