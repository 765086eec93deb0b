#include "tropmat/bool_linear.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>

namespace tropmat {

BLinearMap identity_map(int n) {
  BLinearMap phi{n, n, std::vector<Mask>(n)};
  for (int i = 0; i < n; ++i) phi.col[i] = bit(i + 1);
  return phi;
}

Mask apply(const BLinearMap& phi, Mask v) {
  Mask out = 0;
  Mask s = v;
  while (s) {
    const int i = std::countr_zero(s);
    s &= s - 1;
    out |= phi.col[i];
  }
  return out;
}

BVector apply(const BLinearMap& phi, const BVector& v) {
  if (v.n != phi.source_n) throw DimensionMismatchError("apply: dimension mismatch");
  return {phi.target_n, apply(phi, v.support)};
}

BLinearMap dual_map(const BLinearMap& phi) {
  BLinearMap out{phi.target_n, phi.source_n, std::vector<Mask>(phi.target_n, 0)};
  for (int i = 0; i < phi.source_n; ++i)
    for (int k : elements_of(phi.col[i])) out.col[k - 1] |= bit(i + 1);
  return out;
}

BLinearMap map_from_matrix(const BMatrix& a) {
  BLinearMap phi{a.cols, a.rows, std::vector<Mask>(a.cols)};
  for (int j = 1; j <= a.cols; ++j) phi.col[j - 1] = a.column(j);
  return phi;
}

namespace {

bool augment_row(const std::vector<Mask>& rows, int r, std::vector<int>& match_col,
                 Mask& used) {
  Mask cand = rows[r] & ~used;
  while (cand) {
    const int c = std::countr_zero(cand);
    cand &= cand - 1;
    used |= Mask{1} << c;
    if (match_col[c] < 0 || augment_row(rows, match_col[c], match_col, used)) {
      match_col[c] = r;
      return true;
    }
  }
  return false;
}

// Perfect matching of rows into columns within the given row masks.
bool rows_have_perfect_matching(const std::vector<Mask>& rows, int cols) {
  std::vector<int> match_col(cols, -1);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    Mask used = 0;
    if (!augment_row(rows, r, match_col, used)) return false;
  }
  return true;
}

}  // namespace

bool permanent(const BMatrix& a) {
  if (a.rows != a.cols) throw NotSquareError("permanent of a non-square matrix");
  return rows_have_perfect_matching(a.row, a.cols);
}

bool tropical_kernel_membership(const BVector& f, const BVector& v) {
  if (f.n != v.n) throw DimensionMismatchError("tropical_kernel_membership");
  return card(f.support & v.support) != 1;
}

bool is_surjective(const BLinearMap& phi) {
  for (int k = 1; k <= phi.target_n; ++k) {
    bool hit = false;
    for (int i = 0; i < phi.source_n && !hit; ++i)
      if (phi.col[i] == bit(k)) hit = true;
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

QuotientModule::QuotientModule(int n, const std::vector<std::pair<Mask, Mask>>& pairs)
    : n_(n), pairs_(pairs) {
  if (n > budget_bits())
    throw DimensionBudgetExceededError("congruence closure over 2^" +
                                       std::to_string(n) + " vectors exceeds budget");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> parent(size);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Mask space = full_mask(n);
  for (const auto& [a, b] : pairs_) {
    for (Mask c = 0; c <= space; ++c) {
      const auto ra = find(static_cast<std::uint32_t>(a | c));
      const auto rb = find(static_cast<std::uint32_t>(b | c));
      if (ra != rb) parent[ra] = rb;
      if (space == 0) break;
    }
  }
  // Each class is join-closed (x ~ y forces x ~ x+y), so its maximum is the
  // join of its members and lies in the class.
  std::vector<Mask> class_max(size, 0);
  for (std::size_t v = 0; v < size; ++v) class_max[find(v)] |= v;
  canonical_.resize(size);
  for (std::size_t v = 0; v < size; ++v) canonical_[v] = class_max[find(v)];
  std::vector<char> seen(size, 0);
  for (std::size_t v = 0; v < size; ++v) {
    const auto r = find(v);
    if (!seen[r]) {
      seen[r] = 1;
      ++class_count_;
    }
  }
}

std::vector<Mask> QuotientModule::canonical_forms() const {
  std::vector<Mask> out(canonical_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Mask>> QuotientModule::classes() const {
  std::map<Mask, std::vector<Mask>> by_canonical;
  for (Mask v = 0; v < static_cast<Mask>(canonical_.size()); ++v)
    by_canonical[canonical_[v]].push_back(v);
  std::vector<std::vector<Mask>> out;
  for (auto& [max, members] : by_canonical) {
    std::vector<Mask> cls{max};
    for (Mask m : members)
      if (m != max) cls.push_back(m);
    out.push_back(std::move(cls));
  }
  return out;
}

QuotientModule congruence_closure(int n, std::vector<std::pair<Mask, Mask>> pairs) {
  return QuotientModule(n, pairs);
}

std::vector<std::pair<Mask, Mask>> bend_pairs(Mask form) {
  std::vector<std::pair<Mask, Mask>> out;
  Mask s = form;
  while (s) {
    const Mask j = s & (~s + 1);
    s &= s - 1;
    out.emplace_back(form, form & ~j);
  }
  return out;
}

QuotientModule bend_congruence(int n, const std::vector<Mask>& forms) {
  std::vector<std::pair<Mask, Mask>> pairs;
  for (Mask f : forms) {
    auto p = bend_pairs(f);
    pairs.insert(pairs.end(), p.begin(), p.end());
  }
  return QuotientModule(n, pairs);
}

// ---------------------------------------------------------------------------

FiniteBModule module_from_masks(std::vector<Mask> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  FiniteBModule mod;
  mod.size = static_cast<int>(elements.size());
  const auto shared = std::make_shared<std::vector<Mask>>(std::move(elements));
  mod.zero = 0;  // sorted, so the additive identity (empty support) is first
  mod.join = [shared](int a, int b) {
    const Mask j = (*shared)[a] | (*shared)[b];
    const auto it = std::lower_bound(shared->begin(), shared->end(), j);
    return static_cast<int>(it - shared->begin());
  };
  return mod;
}

FiniteBModule module_from_quotient(const QuotientModule& q) {
  const auto forms = q.canonical_forms();
  FiniteBModule mod;
  mod.size = static_cast<int>(forms.size());
  const auto shared = std::make_shared<std::vector<Mask>>(forms);
  const auto canon = std::make_shared<QuotientModule>(q);
  mod.zero = static_cast<int>(
      std::lower_bound(shared->begin(), shared->end(), q.canonical(0)) -
      shared->begin());
  mod.join = [shared, canon](int a, int b) {
    const Mask j = canon->canonical((*shared)[a] | (*shared)[b]);
    const auto it = std::lower_bound(shared->begin(), shared->end(), j);
    return static_cast<int>(it - shared->begin());
  };
  return mod;
}

FiniteBModuleHomSet hom_set(const FiniteBModule& module) {
  if (module.size > (1 << 16))
    throw SizeBudgetExceededError("hom_set: module too large");
  const int k = module.size;
  std::vector<std::vector<std::uint8_t>> homs;
  for (int d = 0; d < k; ++d) {
    // Candidate zero-preimage: the principal down-set of d.
    std::vector<std::uint8_t> h(k);
    for (int x = 0; x < k; ++x) h[x] = module.join(x, d) == d ? 0 : 1;
    if (h[module.zero] != 0) continue;
    bool ok = true;
    for (int x = 0; x < k && ok; ++x)
      for (int y = x; y < k && ok; ++y)
        if (h[module.join(x, y)] != (h[x] | h[y])) ok = false;
    if (ok) homs.push_back(std::move(h));
  }
  std::sort(homs.begin(), homs.end());
  homs.erase(std::unique(homs.begin(), homs.end()), homs.end());

  FiniteBModuleHomSet hs;
  hs.homs = homs;
  hs.module.size = static_cast<int>(homs.size());
  const auto shared = std::make_shared<std::vector<std::vector<std::uint8_t>>>(homs);
  const std::vector<std::uint8_t> zero_hom(k, 0);
  hs.module.zero = static_cast<int>(
      std::lower_bound(shared->begin(), shared->end(), zero_hom) - shared->begin());
  hs.module.join = [shared, k](int a, int b) {
    std::vector<std::uint8_t> j(k);
    for (int x = 0; x < k; ++x) j[x] = (*shared)[a][x] | (*shared)[b][x];
    const auto it = std::lower_bound(shared->begin(), shared->end(), j);
    return static_cast<int>(it - shared->begin());
  };
  return hs;
}

bool homs_separate_points(const FiniteBModuleHomSet& hs) {
  if (hs.homs.empty()) return true;
  const int k = static_cast<int>(hs.homs.front().size());
  std::vector<std::vector<std::uint8_t>> profiles(k);
  for (int x = 0; x < k; ++x)
    for (const auto& h : hs.homs) profiles[x].push_back(h[x]);
  std::sort(profiles.begin(), profiles.end());
  return std::adjacent_find(profiles.begin(), profiles.end()) == profiles.end();
}

// ---------------------------------------------------------------------------

namespace {

struct LatticeView {
  int size;
  std::vector<int> join;  // row-major
  std::vector<char> leq;
  std::vector<int> irreducibles;
  std::vector<int> height;

  explicit LatticeView(const FiniteBModule& m) : size(m.size) {
    join.resize(size * size);
    leq.resize(size * size);
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) join[a * size + b] = m.join(a, b);
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) leq[a * size + b] = join[a * size + b] == b;
    for (int x = 0; x < size; ++x) {
      int below = m.zero;
      for (int y = 0; y < size; ++y)
        if (y != x && leq[y * size + x]) below = join[below * size + y];
      if (x != m.zero && below != x) irreducibles.push_back(x);
    }
    height.assign(size, 0);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        if (leq[y * size + x]) ++height[x];  // #elements below, an order invariant
  }
};

bool extend_iso(const LatticeView& a, const LatticeView& b, std::vector<int>& image,
                std::size_t pos) {
  if (pos == a.irreducibles.size()) {
    // Map every element as the join of images of irreducibles below it and
    // verify a bijective, join-preserving correspondence.
    std::vector<int> f(a.size, -1);
    for (int x = 0; x < a.size; ++x) {
      int acc = -1;
      for (std::size_t i = 0; i < a.irreducibles.size(); ++i) {
        const int j = a.irreducibles[i];
        if (!a.leq[j * a.size + x]) continue;
        acc = acc < 0 ? image[i] : b.join[acc * b.size + image[i]];
      }
      if (acc < 0) {
        // x has no irreducibles below it, so x is the bottom element.
        for (int z = 0; z < b.size; ++z)
          if (b.height[z] == 1) acc = z;
      }
      f[x] = acc;
    }
    std::vector<char> hit(b.size, 0);
    for (int x = 0; x < a.size; ++x) {
      if (f[x] < 0 || hit[f[x]]) return false;
      hit[f[x]] = 1;
    }
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < a.size; ++y)
        if (f[a.join[x * a.size + y]] != b.join[f[x] * b.size + f[y]]) return false;
    return true;
  }
  const int x = a.irreducibles[pos];
  for (int y : b.irreducibles) {
    if (b.height[y] != a.height[x]) continue;
    bool used = false;
    for (std::size_t i = 0; i < pos && !used; ++i)
      if (image[i] == y) used = true;
    if (used) continue;
    bool order_ok = true;
    for (std::size_t i = 0; i < pos && order_ok; ++i) {
      const int xi = a.irreducibles[i];
      if (static_cast<bool>(a.leq[xi * a.size + x]) !=
              static_cast<bool>(b.leq[image[i] * b.size + y]) ||
          static_cast<bool>(a.leq[x * a.size + xi]) !=
              static_cast<bool>(b.leq[y * b.size + image[i]]))
        order_ok = false;
    }
    if (!order_ok) continue;
    image[pos] = y;
    if (extend_iso(a, b, image, pos + 1)) return true;
  }
  return false;
}

}  // namespace

bool lattice_isomorphic(const FiniteBModule& a, const FiniteBModule& b) {
  if (a.size != b.size) return false;
  LatticeView va(a), vb(b);
  if (va.irreducibles.size() != vb.irreducibles.size()) return false;
  std::vector<int> image(va.irreducibles.size(), -1);
  return extend_iso(va, vb, image, 0);
}

}  // namespace tropmat
