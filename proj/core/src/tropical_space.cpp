#include "tropmat/tropical_space.hpp"

#include <algorithm>
#include <memory>

namespace tropmat {

TropicalLinearSpace::TropicalLinearSpace(Matroid m)
    : matroid_(std::move(m)), generators_(cocircuits(matroid_)) {}

TropicalLinearSpace tls_of(const Matroid& m) { return TropicalLinearSpace(m); }

bool TropicalLinearSpace::contains(Mask v) const {
  const Mask complement = matroid_.ground_mask() & ~v;
  return closure_of(matroid_, complement) == complement;
}

std::vector<Mask> TropicalLinearSpace::elements() const {
  std::vector<Mask> out;
  const Mask ground = matroid_.ground_mask();
  for (Mask f : flats(matroid_)) out.push_back(ground & ~f);
  std::sort(out.begin(), out.end());
  return out;
}

bool tls_contains(const TropicalLinearSpace& l, const BVector& v) {
  if (v.n != l.n()) throw DimensionMismatchError("tls_contains: dimension mismatch");
  const bool by_flat = l.contains(v.support);
  bool by_circuits = true;  // tropker(-^[M]): no circuit meets supp in one element
  for (Mask c : circuits(l.matroid()))
    if (card(c & v.support) == 1) by_circuits = false;
  if (by_flat != by_circuits)
    throw TheoremViolationError("flat and tropical-kernel membership disagree");
  return by_flat;
}

FlatQuotient::FlatQuotient(Matroid m) : matroid_(std::move(m)) {}

FiniteBModule FlatQuotient::as_module() const {
  auto fl = flats(matroid_);
  std::sort(fl.begin(), fl.end());
  FiniteBModule mod;
  mod.size = static_cast<int>(fl.size());
  const Mask bottom = closure_of(matroid_, 0);
  const auto shared = std::make_shared<std::vector<Mask>>(std::move(fl));
  mod.zero = static_cast<int>(
      std::lower_bound(shared->begin(), shared->end(), bottom) - shared->begin());
  const Matroid m = matroid_;
  mod.join = [shared, m](int a, int b) {
    const Mask j = closure_of(m, (*shared)[a] | (*shared)[b]);
    const auto it = std::lower_bound(shared->begin(), shared->end(), j);
    return static_cast<int>(it - shared->begin());
  };
  return mod;
}

FlatQuotient flat_quotient_of(const Matroid& m, bool cross_check) {
  FlatQuotient q(m);
  if (cross_check) {
    if (m.n() > budget_bits())
      throw DimensionBudgetExceededError("flat_quotient_of cross-check over budget");
    std::vector<Mask> forms = circuits(m);
    const QuotientModule engine = bend_congruence(m.n(), forms);
    for_each_subset(m.ground_mask(), [&](Mask s) {
      if (engine.canonical(s) != q.canonical(s))
        throw EquivalenceViolationError(
            "bend-congruence canonical form differs from closure");
    });
  }
  return q;
}

FiniteBModule tls_module(const TropicalLinearSpace& l) {
  return module_from_masks(l.elements());
}

bool duality_check(const Matroid& m) {
  const TropicalLinearSpace l = tls_of(m);
  const FlatQuotient q = flat_quotient_of(m);
  const FiniteBModule lm = tls_module(l);
  const FiniteBModule qm = q.as_module();
  const FiniteBModuleHomSet homs_of_l = hom_set(lm);
  const FiniteBModuleHomSet homs_of_q = hom_set(qm);
  return lattice_isomorphic(homs_of_l.module, qm) &&
         lattice_isomorphic(homs_of_q.module, lm);
}

std::vector<Mask> tls_intersect_coordinate(const TropicalLinearSpace& l, Mask t) {
  const Mask kept = full_mask(l.n()) & ~t;
  std::vector<Mask> out;
  for (Mask v : l.elements())
    if ((v & t) == 0) out.push_back(compact_mask(v, kept));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> tls_project(const TropicalLinearSpace& l, Mask t) {
  const Mask kept = full_mask(l.n()) & ~t;
  std::vector<Mask> gens;
  for (Mask g : l.generators()) gens.push_back(compact_mask(g & kept, kept));
  // Additive closure of the generator images, computed eagerly.
  std::vector<Mask> closed{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> next(closed);
    for (Mask a : closed)
      for (Mask g : gens) next.push_back(a | g);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() != closed.size()) {
      closed = std::move(next);
      grew = true;
    }
  }
  return closed;
}

bool sufficiently_disjoint_fast(const Matroid& m, const Matroid& n) {
  if (m.n() != n.n()) throw GroundSetMismatchError("sufficiently_disjoint");
  for (Mask bm : m.bases())
    for (Mask bn : n.bases())
      if ((bm & bn) == 0) return true;
  return false;
}

bool sufficiently_disjoint(const Matroid& m, const Matroid& n) {
  const bool by_bases = sufficiently_disjoint_fast(m, n);
  const bool by_rank =
      matroid_union(m, n).rank() == m.rank() + n.rank();
  const bool by_wedge = !wedge(indicator(m), indicator(n)).is_zero();
  if (by_bases != by_rank || by_bases != by_wedge)
    throw TheoremViolationError("sufficiently-disjoint characterizations disagree");
  return by_bases;
}

TropicalLinearSpace stable_sum(const Matroid& m, const Matroid& n) {
  if (!sufficiently_disjoint(m, n))
    throw NotSufficientlyMoveableError("stable_sum: no disjoint basis pair");
  const Multivector w = wedge(indicator(m), indicator(n));
  const Matroid sum = matroid_from_plucker(w);
  if (sum.bases() != matroid_union(m, n).bases())
    throw TheoremViolationError("[M]^[N] differs from [M v N]");
  return tls_of(sum);
}

bool tls_subset(const TropicalLinearSpace& a, const TropicalLinearSpace& b) {
  if (a.n() != b.n()) throw GroundSetMismatchError("tls_subset");
  // Generator containment suffices: L_a within L_b iff every cocircuit
  // indicator of a lies in L_b.
  for (Mask g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

namespace {

std::vector<Mask> sorted_elements(const TropicalLinearSpace& l) { return l.elements(); }

Matroid with_trailing_loops(const Matroid& m, int t) {
  return direct_sum(m, uniform_matroid(0, t));
}

}  // namespace

MinorStableSumReport verify_minor_stable_sum(const Matroid& m, const Matroid& n) {
  if (n.n() < m.n()) throw GroundSetMismatchError("verify_minor_stable_sum");
  const int t = n.n() - m.n();
  const Mask t_mask = full_mask(n.n()) & ~full_mask(m.n());
  const Matroid m_padded = with_trailing_loops(m, t);
  MinorStableSumReport report;

  const Matroid contracted = contract_elements(n, t_mask).minor;  // on E
  if (sufficiently_disjoint_fast(m, contracted)) {
    report.contraction_applicable = true;
    if (!sufficiently_disjoint_fast(m_padded, n))
      throw TheoremViolationError("minor-stable-sum(a): moveability not inherited");
    const auto lhs = sorted_elements(tls_of(matroid_union(m, contracted)));
    const auto rhs = tls_intersect_coordinate(tls_of(matroid_union(m_padded, n)), t_mask);
    report.contraction_identity = lhs == rhs;
  }

  const Matroid deleted = delete_elements(n, t_mask).minor;  // on E
  if (sufficiently_disjoint_fast(m, deleted)) {
    report.deletion_applicable = true;
    if (!sufficiently_disjoint_fast(m_padded, n))
      throw TheoremViolationError("minor-stable-sum(b): moveability not inherited");
    const auto lhs = sorted_elements(tls_of(matroid_union(m, deleted)));
    auto rhs = tls_project(tls_of(matroid_union(m_padded, n)), t_mask);
    std::sort(rhs.begin(), rhs.end());
    report.deletion_identity = lhs == rhs;
  }
  return report;
}

MonotonicityReport verify_monotonicity(const Matroid& p, const Matroid& m,
                                       const Matroid& n) {
  if (!tls_subset(tls_of(m), tls_of(n)) || !sufficiently_disjoint_fast(p, n))
    throw PreconditionUnmetError("verify_monotonicity hypotheses not met");
  MonotonicityReport report;
  report.disjoint_with_smaller = sufficiently_disjoint_fast(p, m);
  if (!report.disjoint_with_smaller)
    throw TheoremViolationError("monotonicity: P and M not sufficiently disjoint");
  report.inclusion =
      tls_subset(tls_of(matroid_union(p, m)), tls_of(matroid_union(p, n)));
  if (!report.inclusion)
    throw TheoremViolationError("monotonicity: stable-sum inclusion fails");
  return report;
}

}  // namespace tropmat
