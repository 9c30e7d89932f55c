#include "covlab/oracle.hpp"

#include <algorithm>
#include <map>

#include "covlab/errors.hpp"

namespace covlab::oracle {

namespace {

constexpr int kMaxLiteralGround = 4;
constexpr int kMaxLiteralGroupSweep = 8;

struct FamilySweep {
  int n = 0;
  std::vector<std::uint32_t> subset_bits;    // element mask per nonempty subset id
  std::vector<std::uint32_t> admissible;     // family masks (bit s = subset s present)
};

// Every family of nonempty subsets that covers the ground set and is
// refined by the finest base.
FamilySweep sweep_families(const UniformStructure& s) {
  FamilySweep fs;
  fs.n = s.ground().size();
  if (fs.n > kMaxLiteralGround)
    throw GuardError("literal oracle guarded to ground <= " +
                     std::to_string(kMaxLiteralGround));
  const int subsets = (1 << fs.n) - 1;
  for (int m = 1; m <= subsets; ++m) fs.subset_bits.push_back(static_cast<std::uint32_t>(m));

  std::vector<std::uint32_t> targets;
  for (const auto& b : s.finest().members()) {
    std::uint32_t bits = 0;
    for (int e = b.next(0); e >= 0; e = b.next(e + 1)) bits |= 1u << e;
    targets.push_back(bits);
  }
  // Per target, the families containing a superset of it.
  std::vector<std::uint32_t> contain(targets.size(), 0);
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (int sidx = 0; sidx < subsets; ++sidx)
      if ((targets[t] & ~fs.subset_bits[sidx]) == 0) contain[t] |= 1u << sidx;

  const std::uint32_t all = (1u << fs.n) - 1;
  for (std::uint32_t fam = 1; fam < (1u << subsets); ++fam) {
    std::uint32_t covered = 0;
    for (std::uint32_t rest = fam; rest;) {
      int sidx = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= fs.subset_bits[sidx];
    }
    if (covered != all) continue;
    bool adm = true;
    for (std::size_t t = 0; t < targets.size() && adm; ++t)
      if (!(fam & contain[t])) adm = false;
    if (adm) fs.admissible.push_back(fam);
  }
  return fs;
}

// Exhaustive matching number between the element masks e and f, with an
// edge when the pair bit is set (self pairs are always edges: coverings
// contain every point).
int matching_exhaustive(std::uint32_t e, std::uint32_t f, std::uint32_t pair_sig, int n) {
  std::vector<int> left, right;
  for (int i = 0; i < n; ++i) {
    if ((e >> i) & 1) left.push_back(i);
    if ((f >> i) & 1) right.push_back(i);
  }
  auto pair_bit = [n](int a, int b) {
    if (a == b) return -1;  // encoded separately
    int lo = std::min(a, b), hi = std::max(a, b);
    int idx = 0;
    for (int i = 0; i < lo; ++i) idx += n - 1 - i;
    return idx + (hi - lo - 1);
  };
  int best = 0;
  auto rec = [&](auto&& self, std::size_t li, std::uint32_t used, int size) -> void {
    best = std::max(best, size);
    if (li == left.size()) return;
    self(self, li + 1, used, size);  // leave left[li] unmatched
    for (std::size_t ri = 0; ri < right.size(); ++ri) {
      if ((used >> ri) & 1) continue;
      int a = left[li], b = right[ri];
      bool edge = a == b || ((pair_sig >> pair_bit(a, b)) & 1);
      if (edge) self(self, li + 1, used | (1u << ri), size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

std::vector<std::uint64_t> group_subsets(std::size_t group_size) {
  std::vector<std::uint64_t> es;
  if (group_size <= kMaxLiteralGroupSweep) {
    for (std::uint64_t e = 1; e < (1ull << group_size); ++e) es.push_back(e);
  } else {
    es.push_back(group_size >= 64 ? ~0ull : (1ull << group_size) - 1);
  }
  return es;
}

}  // namespace

Rat mu_literal(const DynamicalInstance& d) {
  const int n = d.ground_size();
  FamilySweep fs = sweep_families(d.structure());
  const int subsets = static_cast<int>(fs.subset_bits.size());
  const int pairs = n * (n - 1) / 2;

  // Pair signature of a family: which two-element sets are co-membered.
  std::vector<std::uint32_t> pair_mask(pairs, 0);
  {
    int p = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b, ++p) {
        std::uint32_t both = (1u << a) | (1u << b);
        for (int sidx = 0; sidx < subsets; ++sidx)
          if ((both & ~fs.subset_bits[sidx]) == 0) pair_mask[p] |= 1u << sidx;
      }
  }
  std::vector<std::uint32_t> sigs;
  for (std::uint32_t fam : fs.admissible) {
    std::uint32_t sig = 0;
    for (int p = 0; p < pairs; ++p)
      if (fam & pair_mask[p]) sig |= 1u << p;
    sigs.push_back(sig);
  }
  std::sort(sigs.begin(), sigs.end());
  sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());

  const auto& group = d.group();
  // nu[sig][f][g]
  std::map<std::uint32_t, std::vector<std::vector<int>>> nu;
  for (std::uint32_t sig : sigs) {
    auto& table = nu[sig];
    table.assign(1u << n, std::vector<int>(group.size(), 0));
    for (std::uint32_t f = 1; f < (1u << n); ++f)
      for (std::size_t gi = 0; gi < group.size(); ++gi) {
        std::uint32_t gf = 0;
        for (int x = 0; x < n; ++x)
          if ((f >> x) & 1) gf |= 1u << group[gi](x);
        table[f][gi] = matching_exhaustive(f, gf, sig, n);
      }
  }

  Rat best(2);  // above the range
  for (std::uint64_t e : group_subsets(group.size()))
    for (std::uint32_t sig : sigs) {
      const auto& table = nu[sig];
      Rat sup(0);
      for (std::uint32_t f = 1; f < (1u << n); ++f) {
        int worst = n + 1;
        for (std::size_t gi = 0; gi < group.size(); ++gi)
          if ((e >> gi) & 1) worst = std::min(worst, table[f][gi]);
        sup = std::max(sup, Rat(worst, std::popcount(f)));
      }
      best = std::min(best, sup);
    }
  return best;
}

Rat omega_literal(const DynamicalInstance& d) {
  const int n = d.ground_size();
  FamilySweep fs = sweep_families(d.structure());

  // Reduce each family to its maximal members; the graph quantities below
  // depend only on that reduction.
  std::vector<std::uint32_t> classes;
  for (std::uint32_t fam : fs.admissible) {
    std::vector<int> ids;
    for (std::uint32_t rest = fam; rest;) {
      ids.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    std::uint32_t reduced = 0;
    for (int i : ids) {
      bool maximal = true;
      for (int j : ids)
        if (i != j && (fs.subset_bits[i] & ~fs.subset_bits[j]) == 0) maximal = false;
      if (maximal) reduced |= 1u << i;
    }
    classes.push_back(reduced);
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  auto to_covering = [&](std::uint32_t fam) {
    std::vector<Subset> ms;
    for (std::uint32_t rest = fam; rest;) {
      int sidx = std::countr_zero(rest);
      rest &= rest - 1;
      Subset m;
      for (int x = 0; x < n; ++x)
        if ((fs.subset_bits[sidx] >> x) & 1) m.add(x);
      ms.push_back(m);
    }
    return Covering::raw(d.structure().ground(), std::move(ms));
  };
  auto join_raw = [&](const Covering& a, const Covering& b) {
    std::vector<Subset> cells;
    for (const auto& x : a.members())
      for (const auto& y : b.members()) {
        Subset cell = x & y;
        if (!cell.empty()) cells.push_back(cell);
      }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return Covering::raw(d.structure().ground(), std::move(cells));
  };

  const auto& group = d.group();
  std::vector<int> nv(classes.size());
  std::vector<std::vector<int>> njoin(classes.size(), std::vector<int>(group.size()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Covering v = to_covering(classes[c]);
    nv[c] = complexity_bruteforce(v, d.structure());
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      std::vector<Subset> image;
      for (const auto& m : v.members()) image.push_back(group[gi].apply(m));
      njoin[c][gi] = complexity_bruteforce(
          join_raw(v, Covering::raw(d.structure().ground(), std::move(image))), d.structure());
    }
  }

  // refines[u][v]: every member of v inside some member of u.
  std::vector<std::vector<bool>> refs(classes.size(), std::vector<bool>(classes.size()));
  for (std::size_t u = 0; u < classes.size(); ++u)
    for (std::size_t v = 0; v < classes.size(); ++v) {
      bool ok = true;
      for (std::uint32_t rv = classes[v]; rv && ok;) {
        int sv = std::countr_zero(rv);
        rv &= rv - 1;
        bool inside = false;
        for (std::uint32_t ru = classes[u]; ru && !inside;) {
          int su = std::countr_zero(ru);
          ru &= ru - 1;
          if ((fs.subset_bits[sv] & ~fs.subset_bits[su]) == 0) inside = true;
        }
        ok = inside;
      }
      refs[u][v] = ok;
    }

  Rat best(0);
  for (std::uint64_t e : group_subsets(group.size())) {
    Rat omega_e(0);
    for (std::size_t u = 0; u < classes.size(); ++u) {
      Rat inner(-1);
      for (std::size_t v = 0; v < classes.size(); ++v) {
        if (!refs[u][v]) continue;
        Rat worst(1);
        for (std::size_t gi = 0; gi < group.size(); ++gi)
          if ((e >> gi) & 1) worst = std::max(worst, Rat(njoin[v][gi], nv[v]));
        if (inner < 0 || worst < inner) inner = worst;
      }
      omega_e = std::max(omega_e, inner);
    }
    best = std::max(best, omega_e);
  }
  return best;
}

int gamma_bruteforce(const MetricSpace& m, const Rat& r) {
  if (m.size() > 12) throw GuardError("gamma_bruteforce guarded to <= 12 points");
  if (r <= 0) throw ValidationError("ball radius must be positive");
  const int n = m.size();
  std::vector<std::uint32_t> balls(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.dist(x, y) < r) balls[x] |= 1u << y;
  const std::uint32_t all = (n == 32 ? ~0u : (1u << n) - 1);
  int best = n + 1;
  for (std::uint32_t centers = 1; centers < (1u << n); ++centers) {
    if (std::popcount(centers) >= best) continue;
    std::uint32_t covered = 0;
    for (std::uint32_t rest = centers; rest;) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= balls[x];
    }
    if (covered == all) best = std::popcount(centers);
  }
  COVLAB_CHECK(best <= n, "full center set always covers");
  return best;
}

}  // namespace covlab::oracle
