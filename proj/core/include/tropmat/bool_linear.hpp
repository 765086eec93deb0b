#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tropmat/errors.hpp"
#include "tropmat/subset.hpp"

namespace tropmat {

// Vectors of B^n and linear forms of (B^n)^v share one representation: the
// support mask. The dual pairing is <x_S, e_T> = [S & T != 0].
struct BVector {
  int n = 0;
  Mask support = 0;

  friend BVector operator+(BVector a, BVector b) {
    if (a.n != b.n) throw DimensionMismatchError("BVector dimensions differ");
    return {a.n, a.support | b.support};
  }
  bool operator==(const BVector&) const = default;
};

struct BMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Mask> row;  // row[i] = mask of columns carrying a 1

  Mask column(int j) const {
    Mask c = 0;
    for (int i = 0; i < rows; ++i)
      if (contains(row[i], j)) c |= bit(i + 1);
    return c;
  }
  bool operator==(const BMatrix&) const = default;
};

// A module homomorphism B^n -> B^m; the action on a vector is the join of the
// columns indexed by its support.
struct BLinearMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<Mask> col;  // col[i] = image mask of the i-th basis vector

  bool operator==(const BLinearMap&) const = default;
};

BLinearMap identity_map(int n);
Mask apply(const BLinearMap& phi, Mask v);
BVector apply(const BLinearMap& phi, const BVector& v);
BLinearMap dual_map(const BLinearMap& phi);
BLinearMap map_from_matrix(const BMatrix& a);  // B^cols -> B^rows

// 1 iff some permutation has all entries 1; decided by perfect matching.
bool permanent(const BMatrix& a);

// v lies in tropker(f) iff |supp(f) & supp(v)| != 1.
bool tropical_kernel_membership(const BVector& f, const BVector& v);

// Over B a singleton join is only achieved by that singleton, so surjectivity
// means every target basis vector appears as a column.
bool is_surjective(const BLinearMap& phi);

// ---------------------------------------------------------------------------
// Congruences on finite free B-modules.

class QuotientModule {
 public:
  // Partition of all 2^n vectors into the congruence generated by `pairs`,
  // via a disjoint-set structure with one union(a+c, b+c) per generator pair
  // and translation c. The transitive closure of all translates is already
  // closed under addition, so a single pass is complete.
  QuotientModule(int n, const std::vector<std::pair<Mask, Mask>>& pairs);

  int n() const { return n_; }
  Mask canonical(Mask v) const { return canonical_[v]; }
  bool congruent(Mask a, Mask b) const { return canonical_[a] == canonical_[b]; }
  int class_count() const { return class_count_; }
  std::vector<Mask> canonical_forms() const;       // sorted, one per class
  std::vector<std::vector<Mask>> classes() const;  // canonical form first
  const std::vector<std::pair<Mask, Mask>>& generators() const { return pairs_; }

 private:
  int n_;
  int class_count_ = 0;
  std::vector<Mask> canonical_;  // canonical form = class maximum (join of class)
  std::vector<std::pair<Mask, Mask>> pairs_;
};

using Congruence = QuotientModule;

QuotientModule congruence_closure(int n, std::vector<std::pair<Mask, Mask>> pairs);

// Bend pairs of a linear form f: (f, f with coordinate j dropped), j in supp(f).
std::vector<std::pair<Mask, Mask>> bend_pairs(Mask form);
QuotientModule bend_congruence(int n, const std::vector<Mask>& forms);

// ---------------------------------------------------------------------------
// Explicit finite B-modules and their duals.

struct FiniteBModule {
  int size = 0;
  int zero = 0;
  std::function<int(int, int)> join;
};

FiniteBModule module_from_masks(std::vector<Mask> elements);  // join = union
// Lattice of canonical forms of a quotient: join(a,b) = canonical(a|b).
FiniteBModule module_from_quotient(const QuotientModule& q);

struct FiniteBModuleHomSet {
  std::vector<std::vector<std::uint8_t>> homs;  // value vectors over elements
  FiniteBModule module;                         // pointwise join structure
};

// All join-and-zero-preserving maps to B. A hom is determined by its
// 1-preimage, whose complement is a join-closed down-set, hence principal;
// candidates are therefore indexed by module elements and verified by brute
// force.
FiniteBModuleHomSet hom_set(const FiniteBModule& module);

// Injectivity of a hom family viewed as a map into B^homs.
bool homs_separate_points(const FiniteBModuleHomSet& hs);

// Finite-lattice isomorphism by matching join-irreducibles (backtracking).
bool lattice_isomorphic(const FiniteBModule& a, const FiniteBModule& b);

}  // namespace tropmat
