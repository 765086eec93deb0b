#include "tropmat/multivector.hpp"

#include <algorithm>
#include <string>

namespace tropmat {

namespace {

void normalize(std::vector<Mask>& terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
}

}  // namespace

bool Multivector::has_term(Mask t) const {
  return std::binary_search(terms.begin(), terms.end(), t);
}

Multivector multivector(int n, int degree, std::vector<Mask> terms) {
  normalize(terms);
  for (Mask t : terms)
    if (card(t) != degree)
      throw Error("multivector term of wrong cardinality: " + std::to_string(t));
  return Multivector{n, degree, std::move(terms)};
}

Multivector unit_multivector(int n) { return Multivector{n, 0, {0}}; }

Multivector add(const Multivector& u, const Multivector& v) {
  if (u.n != v.n || u.degree != v.degree)
    throw AmbientMismatchError("add: multivector shapes differ");
  std::vector<Mask> terms(u.terms);
  terms.insert(terms.end(), v.terms.begin(), v.terms.end());
  normalize(terms);
  return Multivector{u.n, u.degree, std::move(terms)};
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.n != v.n) throw AmbientMismatchError("wedge: ambient dimensions differ");
  std::vector<Mask> terms;
  for (Mask i : u.terms)
    for (Mask j : v.terms)
      if ((i & j) == 0) terms.push_back(i | j);
  normalize(terms);
  return Multivector{u.n, u.degree + v.degree, std::move(terms)};
}

Multivector indicator(const Matroid& m) {
  return Multivector{m.n(), m.rank(), m.bases()};
}

namespace {

bool plucker_via_exchange(const Multivector& v) {
  // Strong basis exchange (B2') on the term family.
  for (Mask b1 : v.terms) {
    for (Mask b2 : v.terms) {
      Mask in = b2 & ~b1;
      while (in) {
        const Mask i = in & (~in + 1);
        in &= in - 1;
        bool found = false;
        Mask out = b1 & ~b2;
        while (out && !found) {
          const Mask j = out & (~out + 1);
          out &= out - 1;
          found = v.has_term((b2 & ~i) | j) && v.has_term((b1 & ~j) | i);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool plucker_via_bend_relations(const Multivector& v) {
  // For each (A,B) with |A| = d+1, |B| = d-1: the terms of the relation are
  // indexed by i in A-B with v_{A-i} = v_{B+i} = 1; over B the bend condition
  // says their number must not be exactly one.
  const int d = v.degree;
  bool ok = true;
  for_each_k_subset(v.n, d + 1, [&](Mask a) {
    if (!ok) return;
    for_each_k_subset(v.n, d - 1, [&](Mask b) {
      if (!ok) return;
      int live = 0;
      Mask diff = a & ~b;
      while (diff && live < 2) {
        const Mask i = diff & (~diff + 1);
        diff &= diff - 1;
        if ((b & i) == 0 && v.has_term(a & ~i) && v.has_term(b | i)) ++live;
      }
      if (live == 1) ok = false;
    });
  });
  return ok;
}

}  // namespace

bool is_plucker(const Multivector& v) {
  if (v.is_zero()) throw ZeroMultivectorError("is_plucker on the zero multivector");
  const bool by_exchange = plucker_via_exchange(v);
  const bool by_bend = plucker_via_bend_relations(v);
  if (by_exchange != by_bend)
    throw EquivalenceViolationError("Plucker-relation and exchange checks disagree");
  return by_exchange;
}

Matroid matroid_from_plucker(const Multivector& v) {
  if (!is_plucker(v)) throw NotPluckerError("term family is not a matroid basis family");
  return Matroid::from_bases(v.n, v.terms);
}

std::pair<Multivector, Multivector> decompose_by_element(const Multivector& v, int t) {
  if (v.is_zero()) throw ZeroMultivectorError("decompose_by_element on zero");
  std::vector<Mask> with_t, without_t;
  for (Mask term : v.terms)
    (contains(term, t) ? with_t : without_t).push_back(term);
  for (Mask& term : with_t) term &= ~bit(t);
  return {Multivector{v.n, v.degree - 1, std::move(with_t)},
          Multivector{v.n, v.degree, std::move(without_t)}};
}

Multivector maximal_minors(const BMatrix& a) {
  if (a.rows > a.cols) throw WideMatrixError("maximal_minors: more rows than columns");
  std::vector<Mask> terms;
  for_each_k_subset(a.cols, a.rows, [&](Mask cols) {
    BMatrix sub{a.rows, a.rows, {}};
    for (int r = 0; r < a.rows; ++r) sub.row.push_back(compact_mask(a.row[r], cols));
    if (permanent(sub)) terms.push_back(cols);
  });
  return Multivector{a.cols, a.rows, std::move(terms)};
}

std::vector<Multivector> independents_indicator(const Matroid& m) {
  std::vector<Multivector> out;
  for (int i = 0; i <= m.rank(); ++i) out.push_back(indicator(truncation(m, i)));
  return out;
}

int SubsetIndex::index_of(Mask s) const {
  const auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
  return it != subsets.end() && *it == s ? static_cast<int>(it - subsets.begin()) : -1;
}

SubsetIndex subset_index(int n, int k) {
  SubsetIndex idx{n, k, {}};
  for_each_k_subset(n, k, [&](Mask s) { idx.subsets.push_back(s); });
  return idx;
}

Mask wedge_with_monomial(Mask form, Mask monomial, const SubsetIndex& idx) {
  Mask out = 0;
  Mask s = form & ~monomial;
  while (s) {
    const Mask e = s & (~s + 1);
    s &= s - 1;
    out |= Mask{1} << idx.index_of(e | monomial);
  }
  return out;
}

QuotientModule wedge_power_quotient(const Matroid& m, int k) {
  if (k < 1 || k > m.rank())
    throw RankOutOfRangeError("wedge power outside 1..rank");
  const auto idx = subset_index(m.n(), k);
  if (static_cast<int>(idx.subsets.size()) > budget_bits())
    throw DimensionBudgetExceededError("wedge_power_quotient: C(n,k) over budget");
  const auto lower = subset_index(m.n(), k - 1);
  std::vector<std::pair<Mask, Mask>> pairs;
  for (Mask c : circuits(m)) {
    for (const auto& [a, b] : bend_pairs(c)) {
      for (Mask i : lower.subsets) {
        const Mask wa = wedge_with_monomial(a, i, idx);
        const Mask wb = wedge_with_monomial(b, i, idx);
        if (wa != wb) pairs.emplace_back(wa, wb);
      }
    }
  }
  return QuotientModule(static_cast<int>(idx.subsets.size()), pairs);
}

}  // namespace tropmat
