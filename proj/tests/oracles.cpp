#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

using gsr::AdditionTable;
using gsr::AssocMode;
using gsr::Element;
using gsr::GammaSemiring;
using gsr::ModuleStructure;

bool advance(std::vector<int>& digits, int base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

bool advance_mixed(std::vector<int>& digits, const std::vector<int>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

int mu_val(const GammaSemiring& s, const std::vector<int>& gdigits,
           const std::vector<int>& args) {
  std::size_t rank = 0;
  for (int d : gdigits) rank = rank * s.r + d;
  std::size_t cell = 0;
  for (int a : args) cell = cell * s.m + a;
  return s.mu[rank][cell];
}

int window_val(const GammaSemiring& s, const std::vector<int>& xs,
               const std::vector<int>& gs, int w) {
  const int n = s.n;
  std::vector<int> inner_args(xs.begin() + (w - 1), xs.begin() + (w - 1) + n);
  std::vector<int> inner_gs(gs.begin() + (w - 1), gs.begin() + (w - 1) + (n - 1));
  const int inner = mu_val(s, inner_gs, inner_args);

  std::vector<int> outer_args, outer_gs;
  for (int t = 0; t < w - 1; ++t) outer_args.push_back(xs[t]);
  outer_args.push_back(inner);
  for (int t = w + n - 1; t < 2 * n - 1; ++t) outer_args.push_back(xs[t]);
  for (int t = 0; t < w - 1; ++t) outer_gs.push_back(gs[t]);
  for (int t = w + n - 2; t < 2 * n - 2; ++t) outer_gs.push_back(gs[t]);
  return mu_val(s, outer_gs, outer_args);
}

std::vector<std::vector<int>> perms_fixing_zero(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

int act_val(const ModuleStructure& mod, const std::vector<int>& gdigits,
            const std::vector<int>& args) {
  const GammaSemiring& s = mod.base;
  std::size_t rank = 0;
  for (int d : gdigits) rank = rank * s.r + d;
  std::size_t idx = 0;
  for (int t = 0; t < s.n; ++t)
    if (t != mod.j - 1) idx = idx * s.m + args[t];
  idx = idx * mod.k + args[mod.j - 1];
  return mod.action[rank][idx];
}

bool monoid_table(const AdditionTable& a) {
  const int m = a.m;
  for (int i = 0; i < m; ++i)
    if (a.at(0, i) != i || a.at(i, 0) != i) return false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (a.at(i, j) != a.at(j, i)) return false;
      for (int k = 0; k < m; ++k)
        if (a.at(a.at(i, j), k) != a.at(i, a.at(j, k))) return false;
    }
  return true;
}


bool modules_isomorphic(const ModuleStructure& a, const ModuleStructure& b) {
  if (a.k != b.k || a.j != b.j) return false;
  const GammaSemiring& s = a.base;
  const std::size_t gcount = a.action.size();
  for (const auto& p : perms_fixing_zero(a.k)) {
    bool ok = true;
    for (int u = 0; u < a.k && ok; ++u)
      for (int v = 0; v < a.k && ok; ++v)
        if (p[a.madd.at(u, v)] != b.madd.at(p[u], p[v])) ok = false;
    for (std::size_t g = 0; g < gcount && ok; ++g) {
      const std::size_t bases = gsr::ipow(s.m, s.n - 1);
      for (std::size_t bv = 0; bv < bases && ok; ++bv)
        for (int u = 0; u < a.k && ok; ++u) {
          const std::size_t ca = bv * a.k + u;
          const std::size_t cb = bv * a.k + p[u];
          if (p[a.action[g][ca]] != b.action[g][cb]) ok = false;
        }
    }
    if (ok) return true;
  }
  return false;
}

// Window starts whose grouping is well-typed with the module element at
// composite position p: inside the window it must sit at the module slot and
// the collapsed value must land back on the module slot; outside, the
// untouched module position must already be the module slot.
std::vector<int> typed_window_starts(int n, int j, int p) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    const bool inside = p >= i && p <= i + n - 1;
    bool ok;
    if (inside) {
      ok = (i == j) && (p - (i - 1) == j);
    } else if (p < i) {
      ok = p == j;
    } else {
      ok = p - (n - 1) == j;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

int module_window_val(const ModuleStructure& mod, int p, const std::vector<int>& gs,
                      const std::vector<int>& vs, int i) {
  const GammaSemiring& s = mod.base;
  const int n = s.n;
  std::vector<int> inner_args(vs.begin() + (i - 1), vs.begin() + (i - 1) + n);
  std::vector<int> inner_gs(gs.begin() + (i - 1), gs.begin() + (i - 1) + (n - 1));
  const bool inside = p >= i && p <= i + n - 1;
  const int inner = inside ? act_val(mod, inner_gs, inner_args)
                           : mu_val(s, inner_gs, inner_args);

  std::vector<int> outer_args, outer_gs;
  for (int t = 0; t < i - 1; ++t) outer_args.push_back(vs[t]);
  outer_args.push_back(inner);
  for (int t = i + n - 1; t < 2 * n - 1; ++t) outer_args.push_back(vs[t]);
  for (int t = 0; t < i - 1; ++t) outer_gs.push_back(gs[t]);
  for (int t = i + n - 2; t < 2 * (n - 1); ++t) outer_gs.push_back(gs[t]);
  return act_val(mod, outer_gs, outer_args);
}

}  // namespace

bool additions_equivalent(const AdditionTable& a, const AdditionTable& b) {
  if (a.m != b.m) return false;
  for (const auto& p : perms_fixing_zero(a.m)) {
    bool ok = true;
    for (int i = 0; i < a.m && ok; ++i)
      for (int j = 0; j < a.m && ok; ++j)
        if (p[a.at(i, j)] != b.at(p[i], p[j])) ok = false;
    if (ok) return true;
  }
  return false;
}

bool a1_holds(const GammaSemiring& s) { return monoid_table(s.add); }

bool a2_holds(const GammaSemiring& s) {
  const int n = s.n;
  std::vector<int> gd(n - 1, 0);
  do {
    for (int slot = 1; slot <= n; ++slot) {
      std::vector<int> args(n, 0);
      do {
        for (int xp = 0; xp < s.m; ++xp) {
          std::vector<int> a = args;
          const int x = args[slot - 1];
          a[slot - 1] = s.add.at(x, xp);
          const int lhs = mu_val(s, gd, a);
          a[slot - 1] = xp;
          const int rhs = s.add.at(mu_val(s, gd, args), mu_val(s, gd, a));
          if (lhs != rhs) return false;
        }
      } while (advance(args, s.m));
    }
  } while (advance(gd, s.r));
  return true;
}

bool a3_holds(const GammaSemiring& s) {
  const int n = s.n;
  std::vector<int> gd(n - 1, 0);
  do {
    std::vector<int> args(n, 0);
    do {
      bool has_zero = false;
      for (int a : args) has_zero = has_zero || a == 0;
      if (has_zero && mu_val(s, gd, args) != 0) return false;
    } while (advance(args, s.m));
  } while (advance(gd, s.r));
  return true;
}

bool a4_holds(const GammaSemiring& s) {
  const int n = s.n;
  std::vector<int> gs(2 * n - 2, 0);
  do {
    std::vector<int> xs(2 * n - 1, 0);
    do {
      const int ref = window_val(s, xs, gs, 1);
      if (s.assoc_mode == AssocMode::PaperEnds) {
        if (ref != window_val(s, xs, gs, n)) return false;
      } else {
        for (int w = 2; w <= n; ++w)
          if (ref != window_val(s, xs, gs, w)) return false;
      }
    } while (advance(xs, s.m));
  } while (advance(gs, s.r));
  return true;
}

bool valid_structure(const GammaSemiring& s) {
  return a1_holds(s) && a2_holds(s) && a3_holds(s) && a4_holds(s);
}

bool isomorphic(const GammaSemiring& a, const GammaSemiring& b) {
  if (a.m != b.m || a.n != b.n || a.r != b.r || a.assoc_mode != b.assoc_mode)
    return false;
  const std::size_t gcount = a.mu.size();
  for (const auto& p : perms_fixing_zero(a.m)) {
    bool ok = true;
    for (int i = 0; i < a.m && ok; ++i)
      for (int j = 0; j < a.m && ok; ++j)
        if (p[a.add.at(i, j)] != b.add.at(p[i], p[j])) ok = false;
    for (std::size_t g = 0; g < gcount && ok; ++g) {
      std::vector<int> args(a.n, 0);
      do {
        std::vector<int> mapped(a.n);
        for (int t = 0; t < a.n; ++t) mapped[t] = p[args[t]];
        std::size_t ca = 0, cb = 0;
        for (int t = 0; t < a.n; ++t) {
          ca = ca * a.m + args[t];
          cb = cb * a.m + mapped[t];
        }
        if (p[a.mu[g][ca]] != b.mu[g][cb]) {
          ok = false;
          break;
        }
      } while (advance(args, a.m));
    }
    if (ok) return true;
  }
  return false;
}

ScanResult scan_ternary_r1(int m, const AdditionTable& add, bool prefill_zeros) {
  ScanResult out;
  GammaSemiring s;
  s.m = m;
  s.n = 3;
  s.r = 1;
  s.add = add;
  s.mu.assign(1, std::vector<Element>(gsr::ipow(m, 3), 0));

  std::vector<std::size_t> cells;
  for (std::size_t c = 0; c < s.mu[0].size(); ++c) {
    if (!prefill_zeros) {
      cells.push_back(c);
      continue;
    }
    std::size_t rem = c;
    bool nonzero = true;
    for (int t = 0; t < 3; ++t) {
      if (rem % m == 0) nonzero = false;
      rem /= m;
    }
    if (nonzero) cells.push_back(c);
  }

  std::vector<int> vals(cells.size(), 0);
  bool more = true;
  while (more) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      s.mu[0][cells[i]] = static_cast<Element>(vals[i]);
    ++out.scanned;
    if (valid_structure(s)) {
      ++out.valid;
      out.structures.push_back(s);
    }
    more = !cells.empty() && advance(vals, m);
    if (cells.empty()) more = false;
  }

  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < out.structures.size(); ++i) {
    bool placed = false;
    for (std::size_t r : reps)
      if (isomorphic(out.structures[r], out.structures[i])) {
        placed = true;
        break;
      }
    if (!placed) reps.push_back(i);
  }
  out.classes = reps.size();
  return out;
}

std::vector<AdditionTable> monoids(int m) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < m; ++i)
    for (int j = i; j < m; ++j) cells.emplace_back(i, j);

  std::vector<AdditionTable> out;
  std::vector<int> vals(cells.size(), 0);
  bool more = true;
  while (more) {
    AdditionTable a;
    a.m = m;
    a.cells.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
      a.cells[static_cast<std::size_t>(i)] = static_cast<Element>(i);
      a.cells[static_cast<std::size_t>(i) * m] = static_cast<Element>(i);
    }
    for (std::size_t t = 0; t < cells.size(); ++t) {
      const auto [i, j] = cells[t];
      a.cells[static_cast<std::size_t>(i) * m + j] = static_cast<Element>(vals[t]);
      a.cells[static_cast<std::size_t>(j) * m + i] = static_cast<Element>(vals[t]);
    }
    if (monoid_table(a)) {
      bool seen = false;
      for (const AdditionTable& prev : out)
        if (additions_equivalent(prev, a)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(std::move(a));
    }
    more = !cells.empty() && advance(vals, m);
    if (cells.empty()) more = false;
  }
  return out;
}

bool valid_module(const ModuleStructure& mod) {
  const GammaSemiring& s = mod.base;
  const int n = s.n;
  const int j = mod.j;
  const int k = mod.k;
  if (!monoid_table(mod.madd)) return false;

  std::vector<int> radix(n, s.m);
  radix[j - 1] = k;

  std::vector<int> gd(n - 1, 0);
  do {
    // zero absorption in every slot
    std::vector<int> zargs(n, 0);
    do {
      bool has_zero = false;
      for (int t = 0; t < n; ++t) has_zero = has_zero || zargs[t] == 0;
      if (has_zero && act_val(mod, gd, zargs) != 0) return false;
    } while (advance_mixed(zargs, radix));
    // additivity in every slot
    for (int slot = 1; slot <= n; ++slot) {
      const bool mslot = slot == j;
      const int vr = mslot ? k : s.m;
      std::vector<int> args(n, 0);
      do {
        for (int xp = 0; xp < vr; ++xp) {
          std::vector<int> a = args;
          const int x = args[slot - 1];
          a[slot - 1] = mslot ? mod.madd.at(x, xp) : s.add.at(x, xp);
          const int lhs = act_val(mod, gd, a);
          a[slot - 1] = xp;
          const int rhs = mod.madd.at(act_val(mod, gd, args), act_val(mod, gd, a));
          if (lhs != rhs) return false;
        }
      } while (advance_mixed(args, radix));
    }
  } while (advance(gd, s.r));

  // compatibility at every well-typed window pair
  std::vector<int> positions{j, 2 * j - 1, j + n - 1};
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  for (int p : positions) {
    const std::vector<int> starts = typed_window_starts(n, j, p);
    if (starts.size() < 2) continue;
    std::vector<int> vrad(2 * n - 1, s.m);
    vrad[p - 1] = k;
    std::vector<int> gs(2 * n - 2, 0);
    do {
      std::vector<int> vs(2 * n - 1, 0);
      do {
        const int ref = module_window_val(mod, p, gs, vs, starts.front());
        if (s.assoc_mode == AssocMode::PaperEnds) {
          if (ref != module_window_val(mod, p, gs, vs, starts.back())) return false;
        } else {
          for (std::size_t t = 1; t < starts.size(); ++t)
            if (ref != module_window_val(mod, p, gs, vs, starts[t])) return false;
        }
      } while (advance_mixed(vs, vrad));
    } while (advance(gs, s.r));
  }
  return true;
}

std::uint64_t count_modules(const GammaSemiring& s, int j, int k_max) {
  std::vector<ModuleStructure> found;
  for (int k = 1; k <= k_max; ++k) {
    for (const AdditionTable& madd : monoids(k)) {
      ModuleStructure mod;
      mod.base = s;
      mod.j = j;
      mod.k = k;
      mod.madd = madd;
      const std::size_t rows = s.gamma_tuple_count();
      const std::size_t row = gsr::ipow(s.m, s.n - 1) * static_cast<std::size_t>(k);
      mod.action.assign(rows, std::vector<Element>(row, 0));

      // every action cell ranges over the module carrier; the validator
      // rejects anything that breaks absorption
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (std::size_t g = 0; g < rows; ++g)
        for (std::size_t c = 0; c < row; ++c) cells.emplace_back(g, c);

      std::vector<int> vals(cells.size(), 0);
      bool more = true;
      while (more) {
        for (std::size_t t = 0; t < cells.size(); ++t)
          mod.action[cells[t].first][cells[t].second] = static_cast<Element>(vals[t]);
        if (valid_module(mod)) {
          bool seen = false;
          for (const ModuleStructure& prev : found)
            if (modules_isomorphic(prev, mod)) {
              seen = true;
              break;
            }
          if (!seen) found.push_back(mod);
        }
        more = !cells.empty() && advance(vals, k);
        if (cells.empty()) more = false;
      }
    }
  }
  return found.size();
}

}  // namespace oracle
