#pragma once

#include <utility>
#include <vector>

#include "tropmat/bool_linear.hpp"
#include "tropmat/matroid.hpp"

namespace tropmat {

// A degree-d element of the d-th wedge power of B^E: a family of d-subsets,
// each carrying coefficient 1. Terms are kept sorted in colex (numeric mask)
// order so equality and hashing are structural. The degree-0 unit is the
// single empty-set term.
struct Multivector {
  int n = 0;
  int degree = 0;
  std::vector<Mask> terms;

  bool is_zero() const { return terms.empty(); }
  bool has_term(Mask t) const;
  bool operator==(const Multivector&) const = default;
};

Multivector multivector(int n, int degree, std::vector<Mask> terms);
Multivector unit_multivector(int n);                 // degree 0
Multivector add(const Multivector& u, const Multivector& v);

// No signs over B: terms are the disjoint unions I | J.
Multivector wedge(const Multivector& u, const Multivector& v);

Multivector indicator(const Matroid& m);  // [M]

// Both the direct bend-form Plucker-relation check and strong basis exchange
// (B2') are evaluated; disagreement is a bug sentinel.
bool is_plucker(const Multivector& v);
Matroid matroid_from_plucker(const Multivector& v);

// v = w ^ e_t + w', neither part mentioning t.
std::pair<Multivector, Multivector> decompose_by_element(const Multivector& v, int t);

// Degree-d multivector of nonzero d x d sub-permanents, one term per column set.
Multivector maximal_minors(const BMatrix& a);

// One indicator per degree 0..rank(M): the truncation indicators, whose sum
// marks all independent sets.
std::vector<Multivector> independents_indicator(const Matroid& m);

// Index of k-subsets of 1..n in colex order, for wedge-power coordinates.
struct SubsetIndex {
  int n = 0;
  int k = 0;
  std::vector<Mask> subsets;  // colex order
  int index_of(Mask s) const;
};
SubsetIndex subset_index(int n, int k);

// The quotient of the k-th wedge power of the dual free module by the wedge
// translates of Q_M's generating bend pairs, on dimension C(n,k).
QuotientModule wedge_power_quotient(const Matroid& m, int k);

// Coordinates of a ^ x_I within the k-subset indexing (a a linear form).
Mask wedge_with_monomial(Mask form, Mask monomial, const SubsetIndex& idx);

}  // namespace tropmat
