#pragma once

#include <optional>
#include <vector>

#include "tropmat/errors.hpp"
#include "tropmat/subset.hpp"

namespace tropmat {

struct GroundSet {
  int n = 0;  // elements are 1..n; n == 0 only for rank-0 edge cases
};

struct SetSystem {
  int n = 0;
  std::vector<Mask> sets;  // A_1,...,A_m; empty sets allowed
};

// A matroid given by its ground-set size, rank and basis family.
// Immutable after construction; all operations below are pure.
class Matroid {
 public:
  // Validated constructor: checks B1, equal cardinality and exchange (B2)
  // exhaustively. Throws EmptyBases/MixedCardinality/ExchangeFailure.
  static Matroid from_bases(int n, std::vector<Mask> bases);

  // For internal, proven-correct constructions (dual, minors, ...).
  static Matroid unchecked(int n, std::vector<Mask> bases);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Mask>& bases() const { return bases_; }
  Mask ground_mask() const { return full_mask(n_); }
  bool is_basis(Mask b) const;

  bool operator==(const Matroid& other) const = default;

 private:
  Matroid(int n, int rank, std::vector<Mask> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}
  int n_;
  int rank_;
  std::vector<Mask> bases_;  // sorted, increasing numeric order
};

Matroid uniform_matroid(int d, int n);

int rank_of(const Matroid& m, Mask x);
bool is_independent(const Matroid& m, Mask x);
Mask closure_of(const Matroid& m, Mask s);
std::vector<Mask> circuits(const Matroid& m);
std::vector<Mask> cocircuits(const Matroid& m);
Mask fundamental_circuit(const Matroid& m, int e, Mask basis);
Matroid dual(const Matroid& m);

// Full 2^n rank table, indexed by subset mask. Used by hot enumeration paths.
std::vector<int> rank_table(const Matroid& m);

// Minors keep original element labels through `kept`/`labels`; `minor` is the
// same matroid compacted onto 1..n'.
struct MinorResult {
  Matroid minor;
  Mask kept = 0;              // surviving original elements
  std::vector<int> labels;    // labels[i-1] = original label of new element i
};

MinorResult delete_elements(const Matroid& m, Mask t);
MinorResult contract_elements(const Matroid& m, Mask t);
MinorResult restriction(const Matroid& m, Mask t);  // M|T

std::vector<Mask> flats(const Matroid& m);

struct FlatLattice {
  std::vector<Mask> flats;           // sorted
  std::vector<int> join;             // index tables, row-major flats.size()^2
  std::vector<int> meet;
  int index_of(Mask f) const;
  int join_of(int a, int b) const { return join[a * flats.size() + b]; }
  int meet_of(int a, int b) const { return meet[a * flats.size() + b]; }
};

FlatLattice lattice_of_flats(const Matroid& m);

// Ground sets are concatenated: N's elements are shifted by m.n().
Matroid direct_sum(const Matroid& m, const Matroid& n);

std::vector<Mask> components(const Matroid& m);
bool is_connected(const Matroid& m);

// Brute-force independence enumeration (I_M union I_N). The rank formula
// min_{Y subset X} |X-Y| + r_M(Y) + r_N(Y) is kept separate as an oracle.
Matroid matroid_union(const Matroid& m, const Matroid& n);
int matroid_union_rank_oracle(const Matroid& m, const Matroid& n, Mask x);

Matroid truncation(const Matroid& m, int i);
Matroid simplify(const Matroid& m);

// Partial-transversal matroid of a set system, via augmenting-path matching.
Matroid transversal_matroid(const SetSystem& s);
bool has_transversal_matching(const SetSystem& s, Mask x);

}  // namespace tropmat
