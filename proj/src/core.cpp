#include "gsr/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gsr {

std::string to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Two: return "two";
  }
  return "?";
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
  }
  return "?";
}

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t v = 1;
  while (exp--) v *= base;
  return v;
}

std::size_t GammaSemiring::gamma_tuple_count() const {
  return ipow(static_cast<std::size_t>(r), static_cast<unsigned>(n - 1));
}

std::size_t GammaSemiring::mu_table_size() const {
  return ipow(static_cast<std::size_t>(m), static_cast<unsigned>(n));
}

void check_shape(const GammaSemiring& s) {
  if (s.m < 1 || s.n < 3 || s.r < 1) throw UsageError("carrier/arity/gamma sizes must satisfy m>=1, n>=3, r>=1");
  if (s.m > 16) throw CapacityError("carrier limit is 16 elements");
  if (s.n > 8 || s.r > 16) throw CapacityError("arity limit is 8, gamma limit is 16");
  if (s.add.m != s.m || s.add.cells.size() != static_cast<std::size_t>(s.m) * s.m)
    throw UsageError("addition table shape mismatch");
  if (s.mu.size() != s.gamma_tuple_count()) throw UsageError("mu table count must be r^(n-1)");
  const std::size_t cells = s.mu_table_size();
  for (const auto& t : s.mu)
    if (t.size() != cells) throw UsageError("mu table size must be m^n");
  for (Element c : s.add.cells)
    if (c >= s.m) throw UsageError("addition cell out of range");
  for (const auto& t : s.mu)
    for (Element c : t)
      if (c >= s.m) throw UsageError("mu cell out of range");
}

std::size_t mu_cell_index(const GammaSemiring& s, const std::vector<int>& args) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * s.m + static_cast<std::size_t>(a);
  return idx;
}

std::size_t gamma_rank(const GammaSemiring& s, const std::vector<int>& gammas) {
  std::size_t idx = 0;
  for (int g : gammas) idx = idx * s.r + static_cast<std::size_t>(g);
  return idx;
}

std::vector<int> decode_gamma(const GammaSemiring& s, std::size_t rank) {
  std::vector<int> out(static_cast<std::size_t>(s.n - 1));
  for (int i = s.n - 2; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(rank % s.r);
    rank /= s.r;
  }
  return out;
}

std::vector<int> decode_args(const GammaSemiring& s, std::size_t cell) {
  std::vector<int> out(static_cast<std::size_t>(s.n));
  for (int i = s.n - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(cell % s.m);
    cell /= s.m;
  }
  return out;
}

Element eval_mu(const GammaSemiring& s, const std::vector<int>& gammas,
                const std::vector<int>& args) {
  if (gammas.size() != static_cast<std::size_t>(s.n - 1))
    throw UsageError("gamma tuple must have n-1 entries");
  if (args.size() != static_cast<std::size_t>(s.n))
    throw UsageError("argument tuple must have n entries");
  for (int g : gammas)
    if (g < 0 || g >= s.r) throw UsageError("gamma value out of range");
  for (int a : args)
    if (a < 0 || a >= s.m) throw UsageError("argument out of range");
  return s.mu[gamma_rank(s, gammas)][mu_cell_index(s, args)];
}

Element window_value(const GammaSemiring& s, const std::vector<int>& xs,
                     const std::vector<int>& gs, int w) {
  const int n = s.n;
  std::vector<int> inner_args(xs.begin() + (w - 1), xs.begin() + (w - 1) + n);
  std::vector<int> inner_gs(gs.begin() + (w - 1), gs.begin() + (w - 1) + (n - 1));
  const Element inner = s.mu[gamma_rank(s, inner_gs)][mu_cell_index(s, inner_args)];

  std::vector<int> outer_args;
  std::vector<int> outer_gs;
  outer_args.reserve(static_cast<std::size_t>(n));
  outer_gs.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < w - 1; ++i) outer_args.push_back(xs[static_cast<std::size_t>(i)]);
  outer_args.push_back(inner);
  for (int i = w + n - 1; i < 2 * n - 1; ++i) outer_args.push_back(xs[static_cast<std::size_t>(i)]);
  for (int i = 0; i < w - 1; ++i) outer_gs.push_back(gs[static_cast<std::size_t>(i)]);
  for (int i = w + n - 2; i < 2 * n - 2; ++i) outer_gs.push_back(gs[static_cast<std::size_t>(i)]);
  return s.mu[gamma_rank(s, outer_gs)][mu_cell_index(s, outer_args)];
}

namespace {

// Odometer over fixed-radix tuples; returns false after the last tuple.
bool next_tuple(std::vector<int>& t, int radix) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    auto& d = t[static_cast<std::size_t>(i)];
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

struct Collector {
  std::vector<Violation>& out;
  int cap;
  int count = 0;
  bool full() const { return count >= cap; }
  void add(Violation v) {
    if (count++ < cap) out.push_back(std::move(v));
  }
};

}  // namespace

ValidationReport validate(const GammaSemiring& s, int max_violations_per_axiom) {
  check_shape(s);
  ValidationReport rep;
  const int m = s.m, n = s.n;
  const std::size_t gt = s.gamma_tuple_count();

  {
    Collector c{rep.violations, max_violations_per_axiom};
    for (int i = 0; i < m && !c.full(); ++i)
      for (int j = i + 1; j < m && !c.full(); ++j)
        if (s.add_at(i, j) != s.add_at(j, i))
          c.add({Axiom::A1, 0, {i, j}, s.add_at(i, j), s.add_at(j, i)});
    for (int i = 0; i < m && !c.full(); ++i)
      for (int j = 0; j < m && !c.full(); ++j)
        for (int k = 0; k < m && !c.full(); ++k) {
          Element l = s.add_at(s.add_at(i, j), k);
          Element r = s.add_at(i, s.add_at(j, k));
          if (l != r) c.add({Axiom::A1, 1, {i, j, k}, l, r});
        }
    for (int i = 0; i < m && !c.full(); ++i) {
      if (s.add_at(0, i) != i) c.add({Axiom::A1, 2, {0, i}, s.add_at(0, i), static_cast<Element>(i)});
      if (c.full()) break;
      if (s.add_at(i, 0) != i) c.add({Axiom::A1, 2, {i, 0}, s.add_at(i, 0), static_cast<Element>(i)});
    }
    if (c.count > 0) rep.valid = false;
  }

  {
    Collector c{rep.violations, max_violations_per_axiom};
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::vector<int> args(static_cast<std::size_t>(n));
    for (int slot = 1; slot <= n && !c.full(); ++slot)
      for (int x = 0; x < m && !c.full(); ++x)
        for (int xp = 0; xp < m && !c.full(); ++xp) {
          std::fill(rest.begin(), rest.end(), 0);
          do {
            for (int i = 0, k = 0; i < n; ++i)
              args[static_cast<std::size_t>(i)] =
                  (i == slot - 1) ? 0 : rest[static_cast<std::size_t>(k++)];
            for (std::size_t g = 0; g < gt; ++g) {
              args[static_cast<std::size_t>(slot - 1)] = s.add_at(x, xp);
              Element lhs = s.mu_at(g, mu_cell_index(s, args));
              args[static_cast<std::size_t>(slot - 1)] = x;
              Element vx = s.mu_at(g, mu_cell_index(s, args));
              args[static_cast<std::size_t>(slot - 1)] = xp;
              Element vxp = s.mu_at(g, mu_cell_index(s, args));
              Element rhs = s.add_at(vx, vxp);
              if (lhs != rhs) {
                std::vector<int> w{x, xp};
                w.insert(w.end(), rest.begin(), rest.end());
                auto gd = decode_gamma(s, g);
                w.insert(w.end(), gd.begin(), gd.end());
                c.add({Axiom::A2, slot, std::move(w), lhs, rhs});
                if (c.full()) break;
              }
            }
            if (c.full()) break;
          } while (next_tuple(rest, m));
        }
    if (c.count > 0) rep.valid = false;
  }

  {
    Collector c{rep.violations, max_violations_per_axiom};
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::vector<int> args(static_cast<std::size_t>(n));
    for (int slot = 1; slot <= n && !c.full(); ++slot) {
      std::fill(rest.begin(), rest.end(), 0);
      do {
        for (int i = 0, k = 0; i < n; ++i)
          args[static_cast<std::size_t>(i)] =
              (i == slot - 1) ? 0 : rest[static_cast<std::size_t>(k++)];
        for (std::size_t g = 0; g < gt; ++g) {
          Element v = s.mu_at(g, mu_cell_index(s, args));
          if (v != 0) {
            std::vector<int> w(args);
            auto gd = decode_gamma(s, g);
            w.insert(w.end(), gd.begin(), gd.end());
            c.add({Axiom::A3, slot, std::move(w), v, 0});
            if (c.full()) break;
          }
        }
        if (c.full()) break;
      } while (next_tuple(rest, m));
    }
    if (c.count > 0) rep.valid = false;
  }

  {
    Collector c{rep.violations, max_violations_per_axiom};
    std::vector<int> gs(static_cast<std::size_t>(2 * n - 2));
    do {
      std::vector<int> xs(static_cast<std::size_t>(2 * n - 1), 0);
      do {
        Element v1 = window_value(s, xs, gs, 1);
        const int w_first = (s.assoc_mode == AssocMode::PaperEnds) ? n : 2;
        for (int w = w_first; w <= n && !c.full(); ++w) {
          Element vw = window_value(s, xs, gs, w);
          if (v1 != vw) {
            std::vector<int> wit(gs);
            wit.insert(wit.end(), xs.begin(), xs.end());
            c.add({Axiom::A4, w, std::move(wit), v1, vw});
          }
        }
        if (c.full()) break;
      } while (next_tuple(xs, m));
      if (c.full()) break;
    } while (next_tuple(gs, s.r));
    if (c.count > 0) rep.valid = false;
  }

  return rep;
}

std::vector<std::pair<int, int>> symmetry_profile(const GammaSemiring& s) {
  std::vector<std::pair<int, int>> broken;
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = s.mu_table_size();
  for (int i = 1; i <= s.n; ++i)
    for (int j = i + 1; j <= s.n; ++j) {
      bool invariant = true;
      for (std::size_t g = 0; g < gt && invariant; ++g)
        for (std::size_t cell = 0; cell < cells && invariant; ++cell) {
          auto args = decode_args(s, cell);
          std::swap(args[static_cast<std::size_t>(i - 1)], args[static_cast<std::size_t>(j - 1)]);
          if (s.mu_at(g, cell) != s.mu_at(g, mu_cell_index(s, args))) invariant = false;
        }
      if (!invariant) broken.emplace_back(i, j);
    }
  return broken;
}

bool is_homomorphism(const Homomorphism& f) {
  const auto& a = f.source;
  const auto& b = f.target;
  if (a.n != b.n || a.r != b.r) throw UsageError("homomorphism requires equal arity and gamma size");
  if (f.map.size() != static_cast<std::size_t>(a.m)) throw UsageError("homomorphism map size mismatch");
  for (Element v : f.map)
    if (v >= b.m) throw UsageError("homomorphism map value out of range");
  if (f.map[0] != 0) return false;
  for (int i = 0; i < a.m; ++i)
    for (int j = 0; j < a.m; ++j)
      if (f.map[a.add_at(i, j)] != b.add_at(f.map[static_cast<std::size_t>(i)], f.map[static_cast<std::size_t>(j)]))
        return false;
  const std::size_t gt = a.gamma_tuple_count();
  const std::size_t cells = a.mu_table_size();
  std::vector<int> mapped(static_cast<std::size_t>(a.n));
  for (std::size_t g = 0; g < gt; ++g)
    for (std::size_t cell = 0; cell < cells; ++cell) {
      auto args = decode_args(a, cell);
      for (int i = 0; i < a.n; ++i)
        mapped[static_cast<std::size_t>(i)] = f.map[static_cast<std::size_t>(args[static_cast<std::size_t>(i)])];
      if (f.map[a.mu_at(g, cell)] != b.mu[g][mu_cell_index(b, mapped)]) return false;
    }
  return true;
}

Mask pullback_ideal(const Homomorphism& f, Mask target_subset) {
  Mask out = 0;
  for (int i = 0; i < f.source.m; ++i)
    if (mask_has(target_subset, f.map[static_cast<std::size_t>(i)])) out |= Mask{1} << i;
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

QuotientStructure bourne_quotient(const GammaSemiring& s, Mask ideal) {
  check_shape(s);
  if (!mask_has(ideal, 0)) throw UsageError("ideal must contain 0");
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j)
      if (mask_has(ideal, i) && mask_has(ideal, j) && !mask_has(ideal, s.add_at(i, j)))
        throw UsageError("ideal must be additively closed");

  const int m = s.m, n = s.n;
  const std::size_t gt = s.gamma_tuple_count();
  UnionFind uf(m);

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      bool related = false;
      for (int p = 0; p < m && !related; ++p)
        for (int q = 0; q < m && !related; ++q)
          if (mask_has(ideal, p) && mask_has(ideal, q) && s.add_at(a, p) == s.add_at(b, q))
            related = true;
      if (related) uf.unite(a, b);
    }

  // One-slot substitutions generate the congruence closure.
  bool changed = true;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::vector<int> args(static_cast<std::size_t>(n));
  while (changed) {
    changed = false;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (int c = 0; c < m; ++c)
          if (uf.unite(s.add_at(a, c), s.add_at(b, c))) changed = true;
        for (int slot = 0; slot < n; ++slot) {
          std::fill(rest.begin(), rest.end(), 0);
          do {
            for (int i = 0, k = 0; i < n; ++i)
              args[static_cast<std::size_t>(i)] = (i == slot) ? 0 : rest[static_cast<std::size_t>(k++)];
            for (std::size_t g = 0; g < gt; ++g) {
              args[static_cast<std::size_t>(slot)] = a;
              Element va = s.mu_at(g, mu_cell_index(s, args));
              args[static_cast<std::size_t>(slot)] = b;
              Element vb = s.mu_at(g, mu_cell_index(s, args));
              if (uf.unite(va, vb)) changed = true;
            }
          } while (next_tuple(rest, m));
        }
      }
  }

  QuotientStructure q;
  q.parent = s;
  q.ideal_bits = ideal;
  q.class_of.assign(static_cast<std::size_t>(m), -1);
  std::vector<int> roots;
  for (int i = 0; i < m; ++i) {
    int rt = uf.find(i);
    if (rt == i) roots.push_back(i);  // roots are least elements, ascending
  }
  for (int i = 0; i < m; ++i) {
    int rt = uf.find(i);
    auto it = std::lower_bound(roots.begin(), roots.end(), rt);
    q.class_of[static_cast<std::size_t>(i)] = static_cast<int>(it - roots.begin());
  }
  q.classes.assign(roots.size(), {});
  for (int i = 0; i < m; ++i)
    q.classes[static_cast<std::size_t>(q.class_of[static_cast<std::size_t>(i)])].push_back(i);

  const int qm = static_cast<int>(roots.size());
  GammaSemiring quo;
  quo.m = qm;
  quo.n = n;
  quo.r = s.r;
  quo.assoc_mode = s.assoc_mode;
  quo.add.m = qm;
  quo.add.cells.assign(static_cast<std::size_t>(qm) * qm, 0);
  for (int i = 0; i < qm; ++i)
    for (int j = 0; j < qm; ++j)
      quo.add.cells[static_cast<std::size_t>(i) * qm + j] =
          static_cast<Element>(q.class_of[static_cast<std::size_t>(s.add_at(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]))]);
  quo.mu.assign(gt, std::vector<Element>(quo.mu_table_size(), 0));
  std::vector<int> qargs(static_cast<std::size_t>(n));
  std::vector<int> pargs(static_cast<std::size_t>(n));
  std::fill(qargs.begin(), qargs.end(), 0);
  do {
    for (int i = 0; i < n; ++i)
      pargs[static_cast<std::size_t>(i)] = roots[static_cast<std::size_t>(qargs[static_cast<std::size_t>(i)])];
    const std::size_t qcell = mu_cell_index(quo, qargs);
    const std::size_t pcell = mu_cell_index(s, pargs);
    for (std::size_t g = 0; g < gt; ++g)
      quo.mu[g][qcell] = static_cast<Element>(q.class_of[static_cast<std::size_t>(s.mu_at(g, pcell))]);
  } while (next_tuple(qargs, qm));

  q.quotient = quo;
  std::vector<Element> proj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) proj[static_cast<std::size_t>(i)] = static_cast<Element>(q.class_of[static_cast<std::size_t>(i)]);
  q.projection = Homomorphism{s, quo, std::move(proj)};
  return q;
}

GammaSemiring relabel(const GammaSemiring& s, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(s.m)) throw UsageError("relabeling size mismatch");
  if (perm[0] != 0) throw UsageError("relabeling must fix 0");
  std::vector<bool> seen(static_cast<std::size_t>(s.m), false);
  for (int v : perm) {
    if (v < 0 || v >= s.m || seen[static_cast<std::size_t>(v)]) throw UsageError("relabeling must be a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
  GammaSemiring out = s;
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j)
      out.add.cells[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * s.m + perm[static_cast<std::size_t>(j)]] =
          static_cast<Element>(perm[static_cast<std::size_t>(s.add_at(i, j))]);
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = s.mu_table_size();
  std::vector<int> mapped(static_cast<std::size_t>(s.n));
  for (std::size_t g = 0; g < gt; ++g)
    for (std::size_t cell = 0; cell < cells; ++cell) {
      auto args = decode_args(s, cell);
      for (int i = 0; i < s.n; ++i)
        mapped[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(args[static_cast<std::size_t>(i)])];
      out.mu[g][mu_cell_index(s, mapped)] = static_cast<Element>(perm[static_cast<std::size_t>(s.mu_at(g, cell))]);
    }
  return out;
}

std::string mask_to_string(Mask bits, int m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < m; ++i)
    if (mask_has(bits, i)) {
      if (!first) os << ',';
      os << i;
      first = false;
    }
  os << '}';
  return os.str();
}

}  // namespace gsr
