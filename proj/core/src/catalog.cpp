#include "tropmat/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace tropmat {

namespace {

bool matroid_less(const Matroid& a, const Matroid& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a.bases() < b.bases();
}

// Strategy one: test the exchange axiom on every nonempty family of
// d-subsets, for every rank d.
std::vector<Matroid> by_family_filter(int n) {
  std::vector<Matroid> out;
  for (int d = 0; d <= n; ++d) {
    std::vector<Mask> sub;
    for_each_k_subset(n, d, [&](Mask s) { sub.push_back(s); });
    const int k = static_cast<int>(sub.size());
    std::vector<int> index(std::size_t{1} << n, -1);
    for (int i = 0; i < k; ++i) index[sub[i]] = i;
    const std::uint32_t limit = std::uint32_t{1} << k;
    for (std::uint32_t fam = 1; fam < limit; ++fam) {
      const auto member = [&](Mask s) { return fam >> index[s] & 1; };
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        if (!(fam >> i & 1)) continue;
        const Mask a = sub[i];
        for (int j = 0; j < k && ok; ++j) {
          if (!(fam >> j & 1)) continue;
          const Mask b = sub[j];
          Mask leave = a & ~b;
          while (leave && ok) {
            const Mask e = leave & (~leave + 1);
            leave &= leave - 1;
            bool exchanged = false;
            Mask enter = b & ~a;
            while (enter && !exchanged) {
              const Mask f = enter & (~enter + 1);
              enter &= enter - 1;
              exchanged = member((a & ~e) | f);
            }
            ok = exchanged;
          }
        }
      }
      if (!ok) continue;
      std::vector<Mask> bases;
      for (int i = 0; i < k; ++i)
        if (fam >> i & 1) bases.push_back(sub[i]);
      out.push_back(Matroid::unchecked(n, std::move(bases)));
    }
  }
  std::sort(out.begin(), out.end(), matroid_less);
  return out;
}

// Strategy two: every matroid on n elements is a unique single-element
// extension of its restriction to the first n-1, indexed by a modular cut
// of the flat lattice.
void modular_cuts(const Matroid& m, const FlatLattice& lat,
                  const std::vector<int>& rank_of_flat,
                  std::vector<std::vector<int>>& cuts) {
  const int k = static_cast<int>(lat.flats.size());
  // Flats are processed from top (largest rank) down; a flat may enter the
  // cut only if every flat strictly above it is already in.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return card(lat.flats[a]) > card(lat.flats[b]);
  });
  std::vector<char> chosen(k, 0);
  std::vector<int> cut;

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      // Modular pairs inside the cut must meet inside the cut.
      for (size_t x = 0; x < cut.size(); ++x)
        for (size_t y = x + 1; y < cut.size(); ++y) {
          const int f = cut[x], g = cut[y];
          if (rank_of_flat[f] + rank_of_flat[g] ==
              rank_of_flat[lat.join_of(f, g)] + rank_of_flat[lat.meet_of(f, g)])
            if (!chosen[lat.meet_of(f, g)]) return;
        }
      cuts.push_back(cut);
      return;
    }
    const int f = order[pos];
    bool up_closed = true;
    for (int g = 0; g < k; ++g)
      if (g != f && (lat.flats[f] & ~lat.flats[g]) == 0 && !chosen[g] &&
          card(lat.flats[g]) > card(lat.flats[f]))
        up_closed = false;
    self(self, pos + 1);  // exclude f
    if (up_closed) {
      chosen[f] = 1;
      cut.push_back(f);
      self(self, pos + 1);
      cut.pop_back();
      chosen[f] = 0;
    }
  };
  rec(rec, 0);
}

Matroid extend_by_cut(const Matroid& m, const FlatLattice& lat,
                      const std::vector<char>& in_cut) {
  const int n = m.n() + 1;
  const Mask e = bit(n);
  const auto in_cut_closure = [&](Mask x) {
    return in_cut[lat.index_of(closure_of(m, x))];
  };
  const auto rk = [&](Mask x) {
    const int base = rank_of(m, x & ~e);
    if ((x & e) == 0) return base;
    return base + (in_cut_closure(x & ~e) ? 0 : 1);
  };
  const int d = rk(full_mask(n));
  std::vector<Mask> bases;
  for_each_k_subset(n, d, [&](Mask s) {
    if (rk(s) == d) bases.push_back(s);
  });
  return Matroid::unchecked(n, std::move(bases));
}

std::vector<Matroid> by_extension(int n, const std::vector<Matroid>& smaller) {
  if (n == 0) return {Matroid::unchecked(0, {0})};
  std::vector<Matroid> out;
  for (const Matroid& m : smaller) {
    const FlatLattice lat = lattice_of_flats(m);
    std::vector<int> rank_of_flat;
    for (Mask f : lat.flats) rank_of_flat.push_back(rank_of(m, f));
    std::vector<std::vector<int>> cuts;
    modular_cuts(m, lat, rank_of_flat, cuts);
    for (const auto& cut : cuts) {
      std::vector<char> in_cut(lat.flats.size(), 0);
      for (int f : cut) in_cut[f] = 1;
      out.push_back(extend_by_cut(m, lat, in_cut));
    }
  }
  std::sort(out.begin(), out.end(), matroid_less);
  return out;
}

std::vector<std::vector<Matroid>>& cache() {
  static std::vector<std::vector<Matroid>> slices;
  return slices;
}

}  // namespace

std::vector<Matroid> enumerate_matroids(int n) {
  if (n < 0 || n > 6)
    throw SizeBudgetExceededError("exhaustive enumeration is limited to n <= 6");
  std::vector<Matroid> a = by_family_filter(n);
  const std::vector<Matroid> smaller =
      n == 0 ? std::vector<Matroid>{} : catalog_slice(n - 1);
  std::vector<Matroid> b = by_extension(n, smaller);
  if (!(a == b))
    throw TheoremViolationError("catalog generation strategies disagree");
  for (const Matroid& m : a) Matroid::from_bases(m.n(), m.bases());
  return a;
}

const std::vector<Matroid>& catalog_slice(int n) {
  auto& slices = cache();
  while (static_cast<int>(slices.size()) <= n)
    slices.push_back(enumerate_matroids(static_cast<int>(slices.size())));
  return slices[n];
}

Catalog build_catalog(int max_n) {
  Catalog c;
  c.max_n = max_n;
  c.exhaustive = max_n <= 6;
  for (int n = 0; n <= std::min(max_n, 6); ++n) c.by_n.push_back(catalog_slice(n));
  for (int n = 7; n <= max_n; ++n) {
    c.by_n.push_back(curated_matroids(n));
    c.exhaustive = false;
  }
  return c;
}

Matroid graphic_matroid_c4() { return uniform_matroid(3, 4); }

Matroid graphic_matroid_k4() {
  // Edges 1..6 of K4 in the order 12, 13, 14, 23, 24, 34; the four triangles
  // are the only non-spanning 3-subsets.
  const std::vector<Mask> triangles = {
      mask_of({1, 2, 4}), mask_of({1, 3, 5}), mask_of({2, 3, 6}),
      mask_of({4, 5, 6})};
  std::vector<Mask> bases;
  for_each_k_subset(6, 3, [&](Mask s) {
    if (std::find(triangles.begin(), triangles.end(), s) == triangles.end())
      bases.push_back(s);
  });
  return Matroid::from_bases(6, bases);
}

std::vector<Matroid> curated_matroids(int n) {
  if (n < 7 || n > 8)
    throw SizeBudgetExceededError("curated families exist for n = 7, 8 only");
  std::vector<Matroid> out;
  for (int d = 0; d <= n; ++d) out.push_back(uniform_matroid(d, n));
  out.push_back(direct_sum(graphic_matroid_k4(), uniform_matroid(1, n - 6)));
  out.push_back(direct_sum(graphic_matroid_c4(), uniform_matroid(2, n - 4)));
  out.push_back(direct_sum(uniform_matroid(2, 3), uniform_matroid(2, n - 3)));
  // Transversal matroids of pseudorandom set systems, fixed seed.
  std::mt19937 rng(12345u + static_cast<unsigned>(n));
  for (int trial = 0; trial < 4; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    SetSystem s{n, {}};
    for (int i = 0; i < d; ++i)
      s.sets.push_back(static_cast<Mask>(rng()) & full_mask(n));
    out.push_back(transversal_matroid(s));
  }
  std::sort(out.begin(), out.end(), matroid_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tropmat
