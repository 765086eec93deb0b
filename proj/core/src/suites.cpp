#include "tropmat/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "tropmat/bool_linear.hpp"
#include "tropmat/catalog.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/morphisms.hpp"
#include "tropmat/multivector.hpp"
#include "tropmat/transversal.hpp"
#include "tropmat/tropical_space.hpp"

namespace tropmat {

namespace {

using Clock = std::chrono::steady_clock;

// Failure text for a caught error; internal-inconsistency errors get a
// "[bug]" tag so callers can distinguish them from plain false verdicts.
std::string fail_text(const Error& err) {
  if (dynamic_cast<const TheoremViolationError*>(&err) ||
      dynamic_cast<const EquivalenceViolationError*>(&err) ||
      dynamic_cast<const WitnessSearchExhaustedError*>(&err))
    return std::string("[bug] ") + err.what();
  return err.what();
}

std::string set_str(Mask s) {
  std::string out = "{";
  for (int e : elements_of(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(e);
  }
  return out + "}";
}

std::string matroid_str(const Matroid& m) {
  std::ostringstream os;
  os << "n=" << m.n() << " bases=";
  bool first = true;
  for (Mask b : m.bases()) {
    if (!first) os << "|";
    first = false;
    if (b == 0) os << "-";
    for (int e : elements_of(b)) os << e;
  }
  return os.str();
}

std::vector<Mask> closure_table(const Matroid& m) {
  const auto rt = rank_table(m);
  std::vector<Mask> cl(rt.size());
  for (Mask x = 0; x < static_cast<Mask>(rt.size()); ++x) {
    Mask c = x;
    for (int e = 1; e <= m.n(); ++e)
      if (!contains(x, e) && rt[x | bit(e)] == rt[x]) c |= bit(e);
    cl[x] = c;
  }
  return cl;
}

// Flat family of a matroid on n <= 6 as a bitset over subset masks.
std::uint64_t flat_bits(const std::vector<Mask>& cl) {
  std::uint64_t out = 0;
  for (Mask x = 0; x < static_cast<Mask>(cl.size()); ++x)
    if (cl[x] == x) out |= std::uint64_t{1} << x;
  return out;
}

std::uint64_t flat_bits_from_bases(int n, const std::vector<Mask>& bases) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<int> rt(size, 0);
  for (Mask b : bases)
    for (Mask x = 0; x < static_cast<Mask>(size); ++x)
      rt[x] = std::max(rt[x], card(x & b));
  std::uint64_t out = 0;
  for (Mask x = 0; x < static_cast<Mask>(size); ++x) {
    bool flat = true;
    for (int e = 1; e <= n && flat; ++e)
      if (!contains(x, e) && rt[x | bit(e)] == rt[x]) flat = false;
    if (flat) out |= std::uint64_t{1} << x;
  }
  return out;
}

// Bases of the matroid union: maximum-cardinality unions of basis pairs.
std::vector<Mask> union_bases(const std::vector<Mask>& a,
                              const std::vector<Mask>& b) {
  int best = -1;
  std::vector<Mask> out;
  for (Mask x : a)
    for (Mask y : b) {
      const int c = card(x | y);
      if (c < best) continue;
      if (c > best) {
        best = c;
        out.clear();
      }
      out.push_back(x | y);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

SuiteReport suite_qflats(int nmax, long long sample, unsigned seed) {
  if (nmax < 0) nmax = 6;
  SuiteReport r{"q-flats"};
  const auto check = [&](const Matroid& m) {
    const auto cl = closure_table(m);
    const QuotientModule q = bend_congruence(m.n(), circuits(m));
    const Mask space = m.ground_mask();
    for_each_subset(space, [&](Mask v) {
      if (q.canonical(v) != cl[v])
        r.failures.push_back("canonical(" + set_str(v) + ") != closure in " +
                             matroid_str(m));
    });
    for_each_subset(space, [&](Mask a) {
      for_each_subset(space, [&](Mask b) {
        ++r.tested;
        if (q.congruent(a, b) != (cl[a] == cl[b]))
          r.failures.push_back("congruence/closure mismatch at " + set_str(a) +
                               "," + set_str(b) + " in " + matroid_str(m));
      });
    });
  };
  for (int n = 0; n <= std::min(nmax, 5); ++n)
    for (const Matroid& m : catalog_slice(n)) check(m);
  if (nmax >= 6) {
    const auto& slice = catalog_slice(6);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, slice.size() - 1);
    const long long count = sample > 0 ? sample : 400;
    for (long long i = 0; i < count; ++i) check(slice[pick(rng)]);
  }
  return r;
}

SuiteReport suite_duality(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 5;
  SuiteReport r{"duality"};
  for (int n = 0; n <= nmax; ++n)
    for (const Matroid& m : catalog_slice(n)) {
      ++r.tested;
      if (!duality_check(m))
        r.failures.push_back("duality fails for " + matroid_str(m));
    }
  return r;
}

SuiteReport suite_minors(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 5;
  SuiteReport r{"minors"};
  for (int n = 0; n <= nmax; ++n)
    for (const Matroid& m : catalog_slice(n)) {
      const TropicalLinearSpace l = tls_of(m);
      for_each_subset(m.ground_mask(), [&](Mask t) {
        ++r.tested;
        const Matroid con = contract_elements(m, t).minor;
        if (tls_of(con).elements() != tls_intersect_coordinate(l, t))
          r.failures.push_back("contraction identity fails for " +
                               matroid_str(m) + " T=" + set_str(t));
        const Matroid del = delete_elements(m, t).minor;
        auto proj = tls_project(l, t);
        std::sort(proj.begin(), proj.end());
        if (tls_of(del).elements() != proj)
          r.failures.push_back("deletion identity fails for " + matroid_str(m) +
                               " T=" + set_str(t));
      });
      // One-element decomposition of the indicator vector.
      for (int t = 1; t <= n; ++t) {
        ++r.tested;
        const auto [w, wp] = decompose_by_element(indicator(m), t);
        const Mask kept = m.ground_mask() & ~bit(t);
        const bool loop = rank_of(m, bit(t)) == 0;
        bool coloop = true;
        for (Mask b : m.bases())
          if (!contains(b, t)) coloop = false;
        const auto compacted = [&](const std::vector<Mask>& terms) {
          std::vector<Mask> out;
          for (Mask s : terms) out.push_back(compact_mask(s, kept));
          std::sort(out.begin(), out.end());
          return out;
        };
        bool ok = true;
        if (loop) ok = w.is_zero();
        if (coloop) ok = ok && wp.is_zero();
        if (!loop)
          ok = ok && !w.is_zero() && is_plucker(w) &&
               compacted(w.terms) == contract_elements(m, bit(t)).minor.bases();
        if (!coloop)
          ok = ok && !wp.is_zero() && is_plucker(wp) &&
               compacted(wp.terms) == delete_elements(m, bit(t)).minor.bases();
        if (!ok)
          r.failures.push_back("decomposition cases fail for " + matroid_str(m) +
                               " t=" + std::to_string(t));
      }
    }
  return r;
}

SuiteReport suite_u36(int, long long, unsigned) {
  SuiteReport r{"u36"};
  const Matroid u36 = uniform_matroid(3, 6);
  const auto idx = subset_index(6, 2);
  const QuotientModule q = wedge_power_quotient(u36, 2);
  if (q.n() != 15) {
    r.failures.push_back("wedge-square dimension is not 15");
    return r;
  }
  const auto coord = [&](int i, int j) {
    return Mask{1} << idx.index_of(bit(i) | bit(j));
  };

  // (i) A triangle of coordinate forms absorbs every other pair form.
  ++r.tested;
  const Mask triangle = coord(1, 2) | coord(1, 3) | coord(2, 3);
  if (!q.congruent(triangle, full_mask(15)))
    r.failures.push_back("triangle sum is not congruent to the full sum");

  // (ii) The perfect-matching sum and its subsums are pairwise distinct.
  const Mask parts[3] = {coord(1, 2), coord(3, 4), coord(5, 6)};
  std::vector<Mask> sums;
  for (int pick = 0; pick < 8; ++pick) {
    Mask s = 0;
    for (int i = 0; i < 3; ++i)
      if (pick >> i & 1) s |= parts[i];
    sums.push_back(s);
  }
  for (size_t i = 0; i < sums.size(); ++i)
    for (size_t j = i + 1; j < sums.size(); ++j) {
      ++r.tested;
      if (q.congruent(sums[i], sums[j]))
        r.failures.push_back("matching subsums " + std::to_string(i) + "," +
                             std::to_string(j) + " are congruent");
    }

  // (iii) The canonical-form operator is not a matroid closure operator.
  ++r.tested;
  bool violated = false;
  const Mask space = full_mask(15);
  for (Mask s = 0; s <= space && !violated; ++s)
    for (int b = 1; b <= 15 && !violated; ++b) {
      if (contains(s, b)) continue;
      if (q.canonical(s) & ~q.canonical(s | bit(b))) violated = true;  // monotone
    }
  for (Mask s = 0; s <= space && !violated; ++s) {
    const Mask cs = q.canonical(s);
    for (int b = 1; b <= 15 && !violated; ++b) {
      if (contains(cs, b)) continue;
      const Mask csb = q.canonical(s | bit(b));
      for (int a = 1; a <= 15 && !violated; ++a) {
        if (a == b || contains(cs, a) || !contains(csb, a)) continue;
        if (!contains(q.canonical(s | bit(a)), b)) violated = true;  // exchange
      }
    }
  }
  if (!violated)
    r.failures.push_back("canonical operator satisfies the closure axioms");
  return r;
}

SuiteReport suite_strongmaps(int nmax, long long sample, unsigned seed) {
  if (nmax < 0) nmax = 3;
  SuiteReport r{"strong-maps"};
  for (int ne = 0; ne <= std::min(nmax, 3); ++ne)
    for (int nf = 0; nf <= std::min(nmax, 3); ++nf) {
      const auto& src = catalog_slice(ne);
      const auto& dst = catalog_slice(nf);
      long long total = 1;
      for (int i = 0; i < ne; ++i) total *= nf + 1;
      for (long long code = 0; code < total; ++code) {
        PointedMap f{ne, nf, {}};
        long long c = code;
        for (int i = 0; i < ne; ++i) {
          f.images.push_back(static_cast<int>(c % (nf + 1)));
          c /= nf + 1;
        }
        for (const Matroid& m : src)
          for (const Matroid& n : dst) {
            ++r.tested;
            try {
              is_strong_map(f, m, n);
            } catch (const Error& err) {
              r.failures.push_back(fail_text(err) + " for " +
                                   matroid_str(m) + " -> " + matroid_str(n));
            }
          }
      }
    }
  // Randomized extension on larger ground sets.
  std::mt19937 rng(seed);
  const long long count = sample > 0 ? sample : 10000;
  std::uniform_int_distribution<int> size_pick(0, 5);
  for (long long i = 0; i < count; ++i) {
    const int ne = size_pick(rng), nf = size_pick(rng);
    const auto& src = catalog_slice(ne);
    const auto& dst = catalog_slice(nf);
    const Matroid& m = src[rng() % src.size()];
    const Matroid& n = dst[rng() % dst.size()];
    PointedMap f{ne, nf, {}};
    for (int k = 0; k < ne; ++k)
      f.images.push_back(static_cast<int>(rng() % (nf + 1)));
    ++r.tested;
    try {
      is_strong_map(f, m, n);
    } catch (const Error& err) {
      r.failures.push_back(fail_text(err) + " for random " +
                           matroid_str(m) + " -> " + matroid_str(n));
    }
  }
  return r;
}

SuiteReport suite_factorization(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 5;
  SuiteReport r{"factorization"};
  for (int n = 0; n <= nmax; ++n) {
    const auto& slice = catalog_slice(n);
    std::vector<std::uint64_t> fb;
    for (const Matroid& m : slice) fb.push_back(flat_bits(closure_table(m)));
    for (size_t i = 0; i < slice.size(); ++i)
      for (size_t j = 0; j < slice.size(); ++j) {
        if (fb[j] & ~fb[i]) continue;  // need flats(N) inside flats(M)
        ++r.tested;
        try {
          const TropicalLinearSpace lp =
              tls_factorization_witness(slice[i], slice[j]);
          const Matroid& p = lp.matroid();
          const Mask t_mask = full_mask(p.n()) & ~full_mask(n);
          if (!(delete_elements(p, t_mask).minor == slice[i]) ||
              !(contract_elements(p, t_mask).minor == slice[j]))
            r.failures.push_back("witness minors differ for " +
                                 matroid_str(slice[i]) + " / " +
                                 matroid_str(slice[j]));
        } catch (const Error& err) {
          r.failures.push_back(fail_text(err) + " for " +
                               matroid_str(slice[i]) + " / " +
                               matroid_str(slice[j]));
        }
      }
  }
  return r;
}

SuiteReport suite_monotonicity(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 5;
  SuiteReport r{"monotonicity"};
  for (int n = 0; n <= nmax; ++n) {
    const auto& slice = catalog_slice(n);
    const int sz = static_cast<int>(slice.size());
    std::vector<std::uint64_t> fb;
    for (const Matroid& m : slice) fb.push_back(flat_bits(closure_table(m)));
    std::vector<std::vector<char>> disjoint(sz, std::vector<char>(sz, 0));
    for (int i = 0; i < sz; ++i)
      for (int j = i; j < sz; ++j) {
        bool found = false;
        for (Mask a : slice[i].bases()) {
          for (Mask b : slice[j].bases())
            if ((a & b) == 0) {
              found = true;
              break;
            }
          if (found) break;
        }
        disjoint[i][j] = disjoint[j][i] = found;
      }
    std::vector<std::pair<int, int>> qpairs;  // (M, N) with L_M inside L_N
    for (int mi = 0; mi < sz; ++mi)
      for (int ni = 0; ni < sz; ++ni)
        if ((fb[mi] & ~fb[ni]) == 0) qpairs.emplace_back(mi, ni);
    std::unordered_map<std::uint64_t, std::uint64_t> memo;
    const auto union_fb = [&](int a, int b) {
      const std::uint64_t key =
          (std::uint64_t{static_cast<std::uint64_t>(std::min(a, b))} << 20) |
          static_cast<std::uint64_t>(std::max(a, b));
      const auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      const std::uint64_t v = flat_bits_from_bases(
          n, union_bases(slice[a].bases(), slice[b].bases()));
      memo.emplace(key, v);
      return v;
    };
    for (int p = 0; p < sz; ++p)
      for (const auto& [mi, ni] : qpairs) {
        if (!disjoint[p][ni]) continue;
        ++r.tested;
        if (!disjoint[p][mi]) {
          r.failures.push_back("P,M not disjoint: " + matroid_str(slice[p]) +
                               " / " + matroid_str(slice[mi]) + " / " +
                               matroid_str(slice[ni]));
          continue;
        }
        if (union_fb(p, mi) & ~union_fb(p, ni))
          r.failures.push_back("stable-sum inclusion fails: " +
                               matroid_str(slice[p]) + " / " +
                               matroid_str(slice[mi]) + " / " +
                               matroid_str(slice[ni]));
      }
  }
  // Exercise the asserted three-route disjointness on small pairs.
  for (int n = 0; n <= std::min(nmax, 3); ++n) {
    const auto& slice = catalog_slice(n);
    for (const Matroid& a : slice)
      for (const Matroid& b : slice) {
        ++r.tested;
        try {
          sufficiently_disjoint(a, b);
        } catch (const Error& err) {
          r.failures.push_back(fail_text(err) + " for " +
                               matroid_str(a) + " / " + matroid_str(b));
        }
      }
  }
  // Minor compatibility of the stable sum.
  for (int nm = 0; nm <= std::min(nmax, 4); ++nm)
    for (int nn = nm + 1; nn <= std::min(nmax, 5); ++nn)
      for (const Matroid& m : catalog_slice(nm))
        for (const Matroid& n : catalog_slice(nn)) {
          ++r.tested;
          try {
            const auto rep = verify_minor_stable_sum(m, n);
            if ((rep.contraction_applicable && !rep.contraction_identity) ||
                (rep.deletion_applicable && !rep.deletion_identity))
              r.failures.push_back("minor identities fail for " +
                                   matroid_str(m) + " / " + matroid_str(n));
          } catch (const Error& err) {
            r.failures.push_back(fail_text(err) + " for " +
                                 matroid_str(m) + " / " + matroid_str(n));
          }
        }
  return r;
}

SuiteReport suite_stiefel(int nmax, long long, unsigned) {
  int budget = nmax < 0 ? 12 : nmax;
  budget = std::min(budget, 16);
  SuiteReport r{"stiefel"};
  const auto decode = [](std::uint64_t code, int rows, int cols) {
    BMatrix a{rows, cols, {}};
    for (int i = 0; i < rows; ++i)
      a.row.push_back((code >> (i * cols)) & full_mask(cols));
    return a;
  };
  const auto leq = [](const BMatrix& a, const BMatrix& b) {
    for (int i = 0; i < a.rows; ++i)
      if (a.row[i] & ~b.row[i]) return false;
    return true;
  };
  for (int d = 1; d * d <= budget; ++d)
    for (int n = d; d * n <= budget; ++n) {
      std::map<std::vector<Mask>, std::vector<std::uint64_t>> fibers;
      const std::uint64_t limit = std::uint64_t{1} << (d * n);
      for (std::uint64_t code = 0; code < limit; ++code) {
        const Multivector v = maximal_minors(decode(code, d, n));
        if (!v.is_zero()) fibers[v.terms].push_back(code);
      }
      const auto sorted_rows = [](BMatrix a) {
        std::sort(a.row.begin(), a.row.end());
        return a.row;
      };
      for (const auto& [terms, codes] : fibers) {
        ++r.tested;
        std::vector<BMatrix> members, maxima;
        for (std::uint64_t code : codes) members.push_back(decode(code, d, n));
        for (size_t i = 0; i < members.size(); ++i) {
          bool is_max = true;
          for (size_t j = 0; j < members.size(); ++j)
            if (j != i && leq(members[i], members[j])) is_max = false;
          if (is_max) maxima.push_back(members[i]);
        }
        // Fibers are closed under row permutation: the maximum is unique as
        // a multiset of rows, so all maximal members share one row multiset.
        const auto key = sorted_rows(maxima.front());
        for (const BMatrix& a : maxima)
          if (sorted_rows(a) != key) {
            r.failures.push_back("maximal members beyond one row orbit at " +
                                 std::to_string(d) + "x" + std::to_string(n));
            break;
          }
        for (const BMatrix& a : members) {
          bool dominated = false;
          for (const BMatrix& b : maxima)
            if (leq(a, b)) dominated = true;
          if (!dominated)
            r.failures.push_back("no maximum dominates a member at " +
                                 std::to_string(d) + "x" + std::to_string(n));
          // Greedy saturation must land on the fiber maximum above `a`.
          const BMatrix g = maximal_presentation(a);
          if (sorted_rows(g) != key || !leq(a, g))
            r.failures.push_back("greedy saturation misses the maximum at " +
                                 std::to_string(d) + "x" + std::to_string(n));
        }
      }
    }
  // An exhibited fiber with several minimal members.
  ++r.tested;
  try {
    const auto rep = stiefel_fiber(indicator(uniform_matroid(2, 3)), 2, 3);
    if (rep.minimals.size() < 2)
      r.failures.push_back("the 2x3 uniform fiber lacks multiple minimals");
    const auto mins = minimal_presentations(BMatrix{2, 3, {0b101, 0b110}});
    if (mins.size() < 2)
      r.failures.push_back("downward search misses multiple minimals");
  } catch (const Error& err) {
    r.failures.push_back(fail_text(err));
  }
  return r;
}

SuiteReport suite_fundamental(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 6;
  SuiteReport r{"fundamental-transversal"};
  for (int n = 0; n <= nmax; ++n)
    for (const Matroid& m : catalog_slice(n)) {
      ++r.tested;
      try {
        const auto witness = transversal_witness(m);
        const bool fundamental = is_fundamental_transversal(m);
        if (fundamental && !witness.transversal)
          r.failures.push_back("fundamental but not transversal: " +
                               matroid_str(m));
        if (witness.transversal &&
            !(transversal_matroid(SetSystem{n, witness.rows}) == m))
          r.failures.push_back("witness round trip fails: " + matroid_str(m));
      } catch (const Error& err) {
        r.failures.push_back(fail_text(err) + " for " + matroid_str(m));
      }
    }
  return r;
}

SuiteReport suite_category(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 6;
  SuiteReport r{"category"};
  // Distinct matroids present distinct congruences.
  for (int n = 0; n <= std::min(nmax, 5); ++n) {
    const auto& slice = catalog_slice(n);
    std::vector<std::uint64_t> fb;
    for (const Matroid& m : slice) fb.push_back(flat_bits(closure_table(m)));
    for (size_t i = 0; i < slice.size(); ++i)
      for (size_t j = i + 1; j < slice.size(); ++j) {
        ++r.tested;
        if (fb[i] == fb[j])
          r.failures.push_back("shared congruence: " + matroid_str(slice[i]) +
                               " vs " + matroid_str(slice[j]));
      }
  }
  for (int na = 0; na <= std::min(nmax, 6); ++na)
    for (int nb = 0; na + nb <= std::min(nmax, 6); ++nb)
      for (const Matroid& a : catalog_slice(na))
        for (const Matroid& b : catalog_slice(nb)) {
          ++r.tested;
          if (!verify_iota_sum(a, b))
            r.failures.push_back("direct-sum presentation mismatch: " +
                                 matroid_str(a) + " (+) " + matroid_str(b));
        }
  for (int n = 0; n <= nmax; ++n)
    for (const Matroid& m : catalog_slice(n)) {
      ++r.tested;
      try {
        is_indecomposable(m);
      } catch (const Error& err) {
        r.failures.push_back(fail_text(err) + " for " + matroid_str(m));
      }
    }
  for (int n = 0; n <= std::min(nmax, 5); ++n)
    for (const Matroid& m : catalog_slice(n)) {
      ++r.tested;
      try {
        const FiniteBModule h = hom_to_unit(m);
        if (!lattice_isomorphic(h, tls_module(tls_of(m))))
          r.failures.push_back("Hom-to-unit not isomorphic to L for " +
                               matroid_str(m));
      } catch (const Error& err) {
        r.failures.push_back(fail_text(err) + " for " + matroid_str(m));
      }
    }
  return r;
}

SuiteReport suite_multivalued(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 3;
  SuiteReport r{"multivalued"};
  for (int ne = 0; ne <= std::min(nmax, 3); ++ne)
    for (int nf = 0; nf <= std::min(nmax, 3); ++nf) {
      const auto& src = catalog_slice(ne);
      const auto& dst = catalog_slice(nf);
      const std::uint64_t total = std::uint64_t{1} << (ne * nf);
      for (std::uint64_t code = 0; code < total; ++code) {
        MultiMap f{ne, nf, {}};
        for (int i = 0; i < ne; ++i)
          f.images.push_back((code >> (i * nf)) & full_mask(nf));
        ++r.tested;
        if (!(linear_to_multimap(multimap_to_linear(f)) == f))
          r.failures.push_back("round trip fails for a multimap");
        for (const Matroid& m : src)
          for (const Matroid& n : dst) {
            ++r.tested;
            try {
              is_multivalued_strong(f, m, n);
            } catch (const Error& err) {
              r.failures.push_back(fail_text(err) + " for " +
                                   matroid_str(m) + " -> " + matroid_str(n));
            }
          }
      }
    }
  return r;
}

SuiteReport suite_plucker(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 5;
  SuiteReport r{"plucker-exchange"};
  for (int n = 0; n <= std::min(nmax, 6); ++n)
    for (const Matroid& m : catalog_slice(n)) {
      ++r.tested;
      try {
        if (!is_plucker(indicator(m)))
          r.failures.push_back("indicator rejected for " + matroid_str(m));
      } catch (const Error& err) {
        r.failures.push_back(fail_text(err) + " for " + matroid_str(m));
      }
    }
  // Exhaustive small families: the relations accept exactly basis families.
  for (int n = 0; n <= 4; ++n)
    for (int d = 1; d <= n; ++d) {
      std::vector<Mask> sub;
      for_each_k_subset(n, d, [&](Mask s) { sub.push_back(s); });
      const std::uint64_t total = std::uint64_t{1} << sub.size();
      for (std::uint64_t fam = 1; fam < total; ++fam) {
        std::vector<Mask> terms;
        for (size_t i = 0; i < sub.size(); ++i)
          if (fam >> i & 1) terms.push_back(sub[i]);
        const Multivector v{n, d, terms};
        ++r.tested;
        bool valid = true;
        try {
          Matroid::from_bases(n, terms);
        } catch (const Error&) {
          valid = false;
        }
        try {
          if (is_plucker(v) != valid)
            r.failures.push_back("relation/axiom mismatch on a family, n=" +
                                 std::to_string(n));
        } catch (const Error& err) {
          r.failures.push_back(fail_text(err));
        }
      }
    }
  return r;
}

SuiteReport suite_catalog(int nmax, long long, unsigned) {
  if (nmax < 0) nmax = 6;
  SuiteReport r{"catalog"};
  const long long expected[] = {1, 2, 5, 16, 68, 406, 3807};
  for (int n = 0; n <= std::min(nmax, 6); ++n) {
    ++r.tested;
    const auto count = static_cast<long long>(catalog_slice(n).size());
    if (count != expected[n])
      r.failures.push_back("catalog count at n=" + std::to_string(n) + " is " +
                           std::to_string(count));
  }
  return r;
}

using SuiteFn = SuiteReport (*)(int, long long, unsigned);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"q-flats", suite_qflats},
      {"duality", suite_duality},
      {"minors", suite_minors},
      {"u36", suite_u36},
      {"strong-maps", suite_strongmaps},
      {"factorization", suite_factorization},
      {"monotonicity", suite_monotonicity},
      {"stiefel", suite_stiefel},
      {"fundamental-transversal", suite_fundamental},
      {"category", suite_category},
      {"multivalued", suite_multivalued},
      {"plucker-exchange", suite_plucker},
      {"catalog", suite_catalog},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const std::string& name, int nmax, long long sample,
                      unsigned seed) {
  for (const auto& [key, fn] : registry()) {
    if (key != name) continue;
    const auto start = Clock::now();
    SuiteReport r = fn(nmax, sample, seed);
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
               .count();
    return r;
  }
  throw UnknownSuiteError("unknown suite: " + name);
}

}  // namespace tropmat
