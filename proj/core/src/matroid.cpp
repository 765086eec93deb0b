#include "tropmat/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace tropmat {

int budget_bits() {
  if (const char* env = std::getenv("TROPMAT_BUDGET")) {
    const int v = std::atoi(env);
    if (v > 0 && v <= 28) return v;
  }
  return 20;
}

namespace {

std::string mask_str(Mask s) {
  std::string out = "{";
  for (int e : elements_of(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(e);
  }
  return out + "}";
}

void normalize(std::vector<Mask>& bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

}  // namespace

Matroid Matroid::from_bases(int n, std::vector<Mask> bases) {
  normalize(bases);
  if (bases.empty()) throw EmptyBasesError("basis family is empty (B1)");
  const int d = card(bases.front());
  const Mask ground = full_mask(n);
  for (Mask b : bases) {
    if (card(b) != d)
      throw MixedCardinalityError("bases of mixed cardinality: " + mask_str(b));
    if ((b & ~ground) != 0)
      throw Error("basis " + mask_str(b) + " not contained in 1.." + std::to_string(n));
  }
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      Mask in = b2 & ~b1;
      while (in) {
        const Mask i = in & (~in + 1);
        in &= in - 1;
        bool found = false;
        Mask out = b1 & ~b2;
        while (out && !found) {
          const Mask j = out & (~out + 1);
          out &= out - 1;
          found = std::binary_search(bases.begin(), bases.end(), (b2 & ~i) | j);
        }
        if (!found)
          throw ExchangeFailureError("exchange fails for B1=" + mask_str(b1) +
                                     " B2=" + mask_str(b2) + " i=" +
                                     std::to_string(elements_of(i)[0]));
      }
    }
  }
  return Matroid(n, d, std::move(bases));
}

Matroid Matroid::unchecked(int n, std::vector<Mask> bases) {
  normalize(bases);
  const int d = bases.empty() ? 0 : card(bases.front());
  return Matroid(n, d, std::move(bases));
}

bool Matroid::is_basis(Mask b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

Matroid uniform_matroid(int d, int n) {
  std::vector<Mask> bases;
  for_each_k_subset(n, d, [&](Mask s) { bases.push_back(s); });
  return Matroid::unchecked(n, std::move(bases));
}

int rank_of(const Matroid& m, Mask x) {
  int best = 0;
  for (Mask b : m.bases()) best = std::max(best, card(x & b));
  return best;
}

bool is_independent(const Matroid& m, Mask x) { return rank_of(m, x) == card(x); }

Mask closure_of(const Matroid& m, Mask s) {
  const int r = rank_of(m, s);
  Mask cl = s;
  Mask rest = m.ground_mask() & ~s;
  while (rest) {
    const Mask i = rest & (~rest + 1);
    rest &= rest - 1;
    if (rank_of(m, s | i) == r) cl |= i;
  }
  return cl;
}

std::vector<int> rank_table(const Matroid& m) {
  std::vector<int> table(Mask{1} << m.n(), 0);
  for (Mask b : m.bases()) {
    // r(X) = max |X & B|; fill by supersets of subsets of B is slower than
    // the direct scan at desk scale.
    for (Mask x = 0; x < static_cast<Mask>(table.size()); ++x)
      table[x] = std::max(table[x], card(x & b));
  }
  return table;
}

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  for (int k = 1; k <= m.rank() + 1 && k <= m.n(); ++k) {
    for_each_k_subset(m.n(), k, [&](Mask s) {
      if (is_independent(m, s)) return;
      Mask rest = s;
      while (rest) {
        const Mask i = rest & (~rest + 1);
        rest &= rest - 1;
        if (!is_independent(m, s & ~i)) return;  // a smaller dependent subset
      }
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> bases;
  bases.reserve(m.bases().size());
  const Mask ground = m.ground_mask();
  for (Mask b : m.bases()) bases.push_back(ground & ~b);
  return Matroid::unchecked(m.n(), std::move(bases));
}

std::vector<Mask> cocircuits(const Matroid& m) { return circuits(dual(m)); }

Mask fundamental_circuit(const Matroid& m, int e, Mask basis) {
  if (!m.is_basis(basis)) throw NotABasisError("not a basis: " + std::to_string(basis));
  if (contains(basis, e))
    throw ElementInBasisError("element " + std::to_string(e) + " lies in the basis");
  // C(e,B) = {e} plus the b in B for which B-b+e is again a basis.
  Mask c = bit(e);
  Mask rest = basis;
  while (rest) {
    const Mask b = rest & (~rest + 1);
    rest &= rest - 1;
    if (m.is_basis((basis & ~b) | bit(e))) c |= b;
  }
  return c;
}

namespace {

MinorResult compacted(const Matroid& m, Mask kept, std::vector<Mask> bases) {
  std::vector<Mask> compact;
  compact.reserve(bases.size());
  for (Mask b : bases) compact.push_back(compact_mask(b, kept));
  MinorResult r{Matroid::unchecked(card(kept), std::move(compact)), kept,
                elements_of(kept)};
  (void)m;
  return r;
}

}  // namespace

MinorResult delete_elements(const Matroid& m, Mask t) {
  const Mask kept = m.ground_mask() & ~t;
  std::vector<Mask> reduced;
  int best = 0;
  for (Mask b : m.bases()) {
    const Mask r = b & kept;
    best = std::max(best, card(r));
    reduced.push_back(r);
  }
  std::vector<Mask> bases;
  for (Mask r : reduced)
    if (card(r) == best) bases.push_back(r);
  return compacted(m, kept, std::move(bases));
}

MinorResult contract_elements(const Matroid& m, Mask t) {
  // M/T = (M* \ T)*
  MinorResult del = delete_elements(dual(m), t);
  del.minor = dual(del.minor);
  return del;
}

MinorResult restriction(const Matroid& m, Mask t) {
  return delete_elements(m, m.ground_mask() & ~t);
}

std::vector<Mask> flats(const Matroid& m) {
  std::vector<Mask> out;
  const Mask ground = m.ground_mask();
  for_each_subset(ground, [&](Mask s) {
    if (closure_of(m, s) == s) out.push_back(s);
  });
  return out;
}

int FlatLattice::index_of(Mask f) const {
  const auto it = std::lower_bound(flats.begin(), flats.end(), f);
  return it != flats.end() && *it == f ? static_cast<int>(it - flats.begin()) : -1;
}

FlatLattice lattice_of_flats(const Matroid& m) {
  FlatLattice lat;
  lat.flats = flats(m);
  const int k = static_cast<int>(lat.flats.size());
  lat.join.resize(k * k);
  lat.meet.resize(k * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      lat.join[a * k + b] = lat.index_of(closure_of(m, lat.flats[a] | lat.flats[b]));
      lat.meet[a * k + b] = lat.index_of(lat.flats[a] & lat.flats[b]);
    }
  }
  return lat;
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  std::vector<Mask> bases;
  bases.reserve(m.bases().size() * n.bases().size());
  for (Mask bm : m.bases())
    for (Mask bn : n.bases()) bases.push_back(bm | (bn << m.n()));
  return Matroid::unchecked(m.n() + n.n(), std::move(bases));
}

std::vector<Mask> components(const Matroid& m) {
  std::vector<int> parent(m.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask c : circuits(m)) {
    const auto elems = elements_of(c);
    for (size_t i = 1; i < elems.size(); ++i)
      parent[find(elems[i] - 1)] = find(elems[0] - 1);
  }
  std::vector<Mask> classes(m.n(), 0);
  for (int i = 0; i < m.n(); ++i) classes[find(i)] |= bit(i + 1);
  std::vector<Mask> out;
  for (int i = 0; i < m.n(); ++i)
    if (classes[i]) out.push_back(classes[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

Matroid matroid_union(const Matroid& m, const Matroid& n) {
  if (m.n() != n.n()) throw GroundSetMismatchError("matroid_union: ground sets differ");
  const auto rm = rank_table(m);
  const auto rn = rank_table(n);
  const Mask ground = m.ground_mask();
  std::vector<Mask> best_bases;
  int best = -1;
  for_each_subset(ground, [&](Mask x) {
    const int cx = card(x);
    if (cx < best) return;
    bool indep = false;
    for_each_subset(x, [&](Mask y) {
      if (!indep && rm[y] == card(y) && rn[x & ~y] == card(x & ~y)) indep = true;
    });
    if (!indep) return;
    if (cx > best) {
      best = cx;
      best_bases.clear();
    }
    best_bases.push_back(x);
  });
  return Matroid::unchecked(m.n(), std::move(best_bases));
}

int matroid_union_rank_oracle(const Matroid& m, const Matroid& n, Mask x) {
  int best = card(x);
  for_each_subset(x, [&](Mask y) {
    best = std::min(best, card(x & ~y) + rank_of(m, y) + rank_of(n, y));
  });
  return best;
}

Matroid truncation(const Matroid& m, int i) {
  if (i < 0 || i > m.rank())
    throw RankOutOfRangeError("truncation rank " + std::to_string(i) +
                              " outside 0.." + std::to_string(m.rank()));
  if (i == m.rank()) return m;
  std::vector<Mask> bases;
  for_each_k_subset(m.n(), i, [&](Mask s) {
    if (is_independent(m, s)) bases.push_back(s);
  });
  return Matroid::unchecked(m.n(), std::move(bases));
}

Matroid simplify(const Matroid& m) {
  const Mask loops = closure_of(m, 0);
  Mask reps = 0;
  Mask seen = loops;
  for (int e = 1; e <= m.n(); ++e) {
    if (contains(seen, e)) continue;
    reps |= bit(e);
    seen |= closure_of(m, bit(e));  // parallel class of e (plus loops)
  }
  return restriction(m, reps).minor;
}

namespace {

// Kuhn augmenting-path matching of elements of x into distinct sets of s.
struct Matcher {
  const SetSystem& s;
  std::vector<int> match_set;  // per set index: matched element or 0

  explicit Matcher(const SetSystem& sys) : s(sys), match_set(sys.sets.size(), 0) {}

  bool augment(int e, std::vector<char>& used) {
    for (size_t i = 0; i < s.sets.size(); ++i) {
      if (used[i] || !contains(s.sets[i], e)) continue;
      used[i] = 1;
      if (match_set[i] == 0 || augment(match_set[i], used)) {
        match_set[i] = e;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

bool has_transversal_matching(const SetSystem& s, Mask x) {
  Matcher matcher(s);
  for (int e : elements_of(x)) {
    std::vector<char> used(s.sets.size(), 0);
    if (!matcher.augment(e, used)) return false;
  }
  return true;
}

Matroid transversal_matroid(const SetSystem& s) {
  int d = 0;
  {
    Matcher matcher(s);
    for (int e = 1; e <= s.n; ++e) {
      std::vector<char> used(s.sets.size(), 0);
      if (matcher.augment(e, used)) ++d;
    }
  }
  std::vector<Mask> bases;
  for_each_k_subset(s.n, d, [&](Mask x) {
    if (has_transversal_matching(s, x)) bases.push_back(x);
  });
  return Matroid::from_bases(s.n, std::move(bases));
}

}  // namespace tropmat
