#pragma once

#include <utility>
#include <vector>

#include "tropmat/bool_linear.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/multivector.hpp"

namespace tropmat {

// The fiber of the maximal-minor (tropical Stiefel) map over one Plucker
// vector, with its entrywise-order extremes. The fiber is closed under row
// permutation; the maximal element is unique as a multiset of rows, and
// `maximal` stores its lexicographically least row ordering. Minimals are
// listed as matrices, row permutations counted separately.
struct FiberReport {
  Multivector plucker;
  std::vector<BMatrix> fiber;
  BMatrix maximal;
  std::vector<BMatrix> minimals;
};

// maximal_minors(a) == indicator(m).
bool check_presentation(const BMatrix& a, const Matroid& m);

// Wedge of the rows as degree-one multivectors; a nonzero wedge of
// coordinate-mask vectors is automatically a basis indicator.
std::pair<Multivector, Matroid> presentation_from_rows(
    const std::vector<BVector>& rows);

// Greedy 0->1 saturation keeping the maximal minors fixed; lands on the
// unique fiber maximum above the input regardless of scan order.
BMatrix maximal_presentation(const BMatrix& a);

// All minimal fiber members found by exhaustive downward search (single
// 1->0 flips) from the maximal presentation.
std::vector<BMatrix> minimal_presentations(const BMatrix& a);

// Exhaustive 2^{dn} fiber enumeration; asserts the unique-maximum theorem.
FiberReport stiefel_fiber(const Multivector& v, int d, int n);

// Flats that are unions of circuits (the empty union makes the bottom flat
// qualify when it is loop-free).
std::vector<Mask> cyclic_flats(const Matroid& m);

// (a) some basis spans every cyclic flat within it; (b) some presentation
// matrix is surjective. Both are decided and must agree.
bool is_fundamental_transversal(const Matroid& m);

struct TransversalWitness {
  bool transversal = false;
  std::vector<Mask> rows;  // rank-many set masks whose wedge is [M]
};

// Factors [M] as a wedge of rank-one vectors when possible. Works per
// connected component; non-uniform components are searched exhaustively
// within the n <= 8, rank <= 4 budget.
TransversalWitness transversal_witness(const Matroid& m);
bool is_transversal(const Matroid& m);

}  // namespace tropmat
