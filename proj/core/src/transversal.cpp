#include "tropmat/transversal.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace tropmat {

bool check_presentation(const BMatrix& a, const Matroid& m) {
  if (a.rows != m.rank() || a.cols != m.n())
    throw ShapeMismatchError("check_presentation: matrix shape does not match matroid");
  return maximal_minors(a) == indicator(m);
}

std::pair<Multivector, Matroid> presentation_from_rows(
    const std::vector<BVector>& rows) {
  if (rows.empty()) throw Error("presentation_from_rows: no rows");
  const int n = rows[0].n;
  Multivector w = unit_multivector(n);
  for (const BVector& r : rows) {
    if (r.n != n) throw DimensionMismatchError("presentation_from_rows: ragged rows");
    std::vector<Mask> terms;
    for (int e : elements_of(r.support)) terms.push_back(bit(e));
    w = wedge(w, Multivector{n, 1, std::move(terms)});
  }
  if (w.is_zero()) throw ZeroWedgeError("rows are not sufficiently disjoint");
  return {w, Matroid::from_bases(n, w.terms)};
}

BMatrix maximal_presentation(const BMatrix& a) {
  const Multivector v = maximal_minors(a);
  if (v.is_zero()) throw ZeroPluckerVectorError("matrix has no nonzero maximal minor");
  BMatrix b = a;
  for (int i = 0; i < b.rows; ++i)
    for (int j = 1; j <= b.cols; ++j) {
      if (contains(b.row[i], j)) continue;
      b.row[i] |= bit(j);
      if (!(maximal_minors(b) == v)) b.row[i] &= ~bit(j);
    }
  return b;
}

namespace {

std::uint64_t encode(const BMatrix& a) {
  std::uint64_t code = 0;
  for (int i = 0; i < a.rows; ++i)
    code |= static_cast<std::uint64_t>(a.row[i]) << (i * a.cols);
  return code;
}

BMatrix decode(std::uint64_t code, int rows, int cols) {
  BMatrix a{rows, cols, {}};
  const Mask keep = full_mask(cols);
  for (int i = 0; i < rows; ++i) a.row.push_back((code >> (i * cols)) & keep);
  return a;
}

bool entrywise_leq(const BMatrix& a, const BMatrix& b) {
  for (int i = 0; i < a.rows; ++i)
    if (a.row[i] & ~b.row[i]) return false;
  return true;
}

}  // namespace

std::vector<BMatrix> minimal_presentations(const BMatrix& a) {
  if (a.rows * a.cols > 16)
    throw SizeBudgetExceededError("minimal_presentations: matrix too large");
  const Multivector v = maximal_minors(a);
  if (v.is_zero()) throw ZeroPluckerVectorError("matrix has no nonzero maximal minor");
  std::vector<std::uint64_t> stack{encode(maximal_presentation(a))};
  std::unordered_set<std::uint64_t> seen{stack[0]};
  std::vector<std::uint64_t> minimal;
  while (!stack.empty()) {
    const std::uint64_t code = stack.back();
    stack.pop_back();
    const BMatrix b = decode(code, a.rows, a.cols);
    bool any_flip = false;
    for (int i = 0; i < b.rows; ++i)
      for (int j = 1; j <= b.cols; ++j) {
        if (!contains(b.row[i], j)) continue;
        BMatrix c = b;
        c.row[i] &= ~bit(j);
        if (maximal_minors(c) == v) {
          any_flip = true;
          if (seen.insert(encode(c)).second) stack.push_back(encode(c));
        }
      }
    if (!any_flip) minimal.push_back(code);
  }
  std::sort(minimal.begin(), minimal.end());
  std::vector<BMatrix> out;
  for (std::uint64_t code : minimal) out.push_back(decode(code, a.rows, a.cols));
  return out;
}

FiberReport stiefel_fiber(const Multivector& v, int d, int n) {
  if (v.n != n || v.degree != d)
    throw ShapeMismatchError("stiefel_fiber: multivector shape mismatch");
  if (d * n > 16) throw SizeBudgetExceededError("stiefel_fiber: shape too large");
  if (v.is_zero()) throw ZeroPluckerVectorError("stiefel_fiber: zero multivector");
  FiberReport report;
  report.plucker = v;
  const std::uint64_t limit = std::uint64_t{1} << (d * n);
  for (std::uint64_t code = 0; code < limit; ++code) {
    BMatrix a = decode(code, d, n);
    if (maximal_minors(a) == v) report.fiber.push_back(std::move(a));
  }
  if (report.fiber.empty())
    throw EmptyFiberError("multivector is not a vector of maximal minors");
  // The fiber is closed under row permutation, so the maximal element is
  // unique only as a multiset of rows; matrices differing by row order are
  // separate members here.
  std::vector<BMatrix> maxima;
  for (const BMatrix& a : report.fiber) {
    bool is_max = true, is_min = true;
    for (const BMatrix& b : report.fiber) {
      if (b == a) continue;
      if (entrywise_leq(a, b)) is_max = false;
      if (entrywise_leq(b, a)) is_min = false;
    }
    if (is_max) maxima.push_back(a);
    if (is_min) report.minimals.push_back(a);
  }
  const auto sorted_rows = [](BMatrix a) {
    std::sort(a.row.begin(), a.row.end());
    return a.row;
  };
  const auto key = sorted_rows(maxima.front());
  for (const BMatrix& a : maxima)
    if (sorted_rows(a) != key)
      throw TheoremViolationError(
          "fiber has maximal elements beyond one row-permutation orbit");
  report.maximal = *std::min_element(
      maxima.begin(), maxima.end(),
      [](const BMatrix& a, const BMatrix& b) { return a.row < b.row; });
  for (const BMatrix& a : report.fiber) {
    bool dominated = false;
    for (const BMatrix& b : maxima)
      if (entrywise_leq(a, b)) dominated = true;
    if (!dominated)
      throw TheoremViolationError("no fiber maximum dominates a member");
  }
  return report;
}

std::vector<Mask> cyclic_flats(const Matroid& m) {
  const auto cs = circuits(m);
  std::vector<Mask> out;
  for (Mask f : flats(m)) {
    Mask covered = 0;
    for (Mask c : cs)
      if ((c & ~f) == 0) covered |= c;
    if (covered == f) out.push_back(f);
  }
  return out;
}

bool is_fundamental_transversal(const Matroid& m) {
  const auto cyclic = cyclic_flats(m);
  bool by_basis = false;
  for (Mask b : m.bases()) {
    bool spans_all = true;
    for (Mask f : cyclic)
      if (rank_of(m, f & b) != rank_of(m, f)) spans_all = false;
    if (spans_all) by_basis = true;
  }

  // A surjective presentation can be normalized to carry unit columns on a
  // basis; the remaining entries are then forced by the unit minors, so one
  // candidate matrix per basis decides the criterion.
  bool by_presentation = false;
  const int d = m.rank();
  for (Mask b : m.bases()) {
    const auto basis_elems = elements_of(b);
    BMatrix a{d, m.n(), std::vector<Mask>(d, 0)};
    for (int r = 0; r < d; ++r) {
      a.row[r] |= bit(basis_elems[r]);
      const Mask rest = b & ~bit(basis_elems[r]);
      for (int e = 1; e <= m.n(); ++e)
        if (!contains(b, e) && m.is_basis(rest | bit(e))) a.row[r] |= bit(e);
    }
    if (check_presentation(a, m)) by_presentation = true;
  }
  if (d == 0) by_presentation = by_basis;  // the empty matrix is surjective

  if (by_basis != by_presentation)
    throw EquivalenceViolationError("fundamental-transversal criteria disagree");
  return by_basis;
}

namespace {

struct ComponentSearch {
  const Matroid& mc;
  std::vector<Mask> bases;  // sorted
  std::vector<Mask> pool;   // candidate rows
  std::vector<Mask> chosen;

  // Terms are ALL partial transversals of the chosen rows, dependent ones
  // included: the wedge over B keeps every distinct-element selection, so a
  // dependent full transversal must surface and fail the leaf comparison.
  bool dfs(size_t start, int remaining, const std::vector<Mask>& terms) {
    if (remaining == 0) return terms == bases;
    for (size_t i = start; i < pool.size(); ++i) {
      const Mask w = pool[i];
      std::vector<Mask> next;
      for (Mask t : terms)
        for (int e : elements_of(w & ~t)) next.push_back(t | bit(e));
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) continue;
      bool covers = true;
      for (Mask b : bases) {
        bool hit = false;
        for (Mask t : next)
          if ((t & ~b) == 0) { hit = true; break; }
        if (!hit) { covers = false; break; }
      }
      if (!covers) continue;
      chosen.push_back(w);
      if (dfs(i, remaining - 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

TransversalWitness transversal_witness(const Matroid& m) {
  TransversalWitness out;
  std::vector<Mask> rows;
  for (Mask comp : components(m)) {
    const auto res = restriction(m, comp);
    const Matroid& mc = res.minor;
    const int nc = mc.n();
    const int dc = mc.rank();
    if (dc == 0) continue;  // loops never enter a row
    if (mc.bases().size() == binomial(nc, dc)) {
      for (int i = 0; i < dc; ++i) rows.push_back(comp);
      continue;
    }
    if (nc > 8 || dc > 4)
      throw SizeBudgetExceededError("transversal search beyond brute-force budget");
    ComponentSearch search{mc, mc.bases(), {}, {}};
    for (Mask w = 1; w <= mc.ground_mask(); ++w) {
      bool meets_all = true;
      for (Mask b : search.bases)
        if ((w & b) == 0) { meets_all = false; break; }
      if (meets_all) search.pool.push_back(w);
    }
    if (!search.dfs(0, dc, {0})) return out;  // component not transversal
    for (Mask w : search.chosen) rows.push_back(expand_mask(w, comp));
  }

  Multivector w = unit_multivector(m.n());
  for (Mask r : rows) {
    std::vector<Mask> terms;
    for (int e : elements_of(r)) terms.push_back(bit(e));
    w = wedge(w, Multivector{m.n(), 1, std::move(terms)});
  }
  if (!(w == indicator(m)))
    throw TheoremViolationError("assembled rows do not factor the indicator");
  out.transversal = true;
  out.rows = std::move(rows);
  return out;
}

bool is_transversal(const Matroid& m) { return transversal_witness(m).transversal; }

}  // namespace tropmat
