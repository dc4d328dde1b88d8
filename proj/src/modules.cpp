#include "gsr/modules.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gsr/enumerate.hpp"
#include "gsr/primes.hpp"

namespace gsr {

std::size_t ModuleStructure::row_size() const {
  return ipow(base.m, base.n - 1) * static_cast<std::size_t>(k);
}

std::size_t ModuleStructure::cell_index(const std::vector<int>& base_vals, int u) const {
  std::size_t idx = 0;
  for (int v : base_vals) idx = idx * static_cast<std::size_t>(base.m) + static_cast<std::size_t>(v);
  return idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(u);
}

Element ModuleStructure::act(std::size_t gamma_rank, const std::vector<int>& args) const {
  std::vector<int> base_vals;
  base_vals.reserve(static_cast<std::size_t>(base.n - 1));
  for (int t = 0; t < base.n; ++t)
    if (t != j - 1) base_vals.push_back(args[static_cast<std::size_t>(t)]);
  return action[gamma_rank][cell_index(base_vals, args[static_cast<std::size_t>(j - 1)])];
}

namespace {

bool next_tuple(std::vector<int>& digits, const std::vector<int>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
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

// Window start positions whose grouping stays well-typed with the module
// element at composite position p (1-based, module slot j).
std::vector<int> typed_windows(int n, int j, int p) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    bool typed = (i == j && p == 2 * j - 1) || (p < i && p == j) ||
                 (p > i + n - 1 && p == j + n - 1);
    if (typed) out.push_back(i);
  }
  return out;
}

Element eval_window_at(const ModuleStructure& mod, int p, const std::vector<int>& gs,
                       const std::vector<int>& vs, int i) {
  const GammaSemiring& s = mod.base;
  const int n = s.n;
  std::vector<int> inner_args(vs.begin() + (i - 1), vs.begin() + (i - 1) + n);
  std::vector<int> inner_gs(gs.begin() + (i - 1), gs.begin() + (i - 1) + (n - 1));
  std::vector<int> outer_gs;
  for (int t = 0; t < i - 1; ++t) outer_gs.push_back(gs[static_cast<std::size_t>(t)]);
  for (int t = i + n - 2; t < 2 * (n - 1); ++t) outer_gs.push_back(gs[static_cast<std::size_t>(t)]);
  const std::size_t ig = gamma_rank(s, inner_gs);
  const std::size_t og = gamma_rank(s, outer_gs);

  std::vector<int> outer_args;
  for (int t = 0; t < i - 1; ++t) outer_args.push_back(vs[static_cast<std::size_t>(t)]);
  outer_args.push_back(0);
  for (int t = i + n - 1; t < 2 * n - 1; ++t) outer_args.push_back(vs[static_cast<std::size_t>(t)]);

  if (p >= i && p <= i + n - 1) {
    Element inner_val = mod.act(ig, inner_args);
    outer_args[static_cast<std::size_t>(i - 1)] = inner_val;
    return mod.act(og, outer_args);
  }
  Element inner_val = s.mu_at(ig, mu_cell_index(s, inner_args));
  outer_args[static_cast<std::size_t>(i - 1)] = inner_val;
  return mod.act(og, outer_args);
}

}  // namespace

ValidationReport validate_module(const ModuleStructure& mod) {
  const GammaSemiring& s = mod.base;
  check_shape(s);
  if (mod.j < 1 || mod.j > s.n) throw UsageError("module slot out of range");
  if (mod.k < 1) throw UsageError("module carrier must be nonempty");
  if (mod.madd.m != mod.k ||
      mod.madd.cells.size() != static_cast<std::size_t>(mod.k) * static_cast<std::size_t>(mod.k))
    throw UsageError("module addition shape mismatch");
  if (mod.action.size() != s.gamma_tuple_count()) throw UsageError("action row count mismatch");
  for (const auto& row : mod.action)
    if (row.size() != mod.row_size()) throw UsageError("action row size mismatch");
  for (const auto& row : mod.action)
    for (Element v : row)
      if (v >= mod.k) throw UsageError("action value out of range");

  ValidationReport report;
  const int cap = 16;
  const int n = s.n;
  const int j = mod.j;
  const int k = mod.k;
  const std::size_t gt = s.gamma_tuple_count();

  {
    Collector c{report.violations, cap};
    for (int a = 0; a < k && !c.full(); ++a)
      for (int b = a; b < k && !c.full(); ++b)
        if (mod.madd.at(a, b) != mod.madd.at(b, a))
          c.add({Axiom::A1, 0, {a, b}, mod.madd.at(a, b), mod.madd.at(b, a)});
    for (int a = 0; a < k && !c.full(); ++a)
      for (int b = 0; b < k && !c.full(); ++b)
        for (int d = 0; d < k && !c.full(); ++d) {
          Element lhs = mod.madd.at(mod.madd.at(a, b), d);
          Element rhs = mod.madd.at(a, mod.madd.at(b, d));
          if (lhs != rhs) c.add({Axiom::A1, 1, {a, b, d}, lhs, rhs});
        }
    for (int a = 0; a < k && !c.full(); ++a) {
      if (mod.madd.at(0, a) != a) c.add({Axiom::A1, 2, {0, a}, mod.madd.at(0, a), static_cast<Element>(a)});
      if (c.full()) break;
      if (mod.madd.at(a, 0) != a) c.add({Axiom::A1, 2, {a, 0}, mod.madd.at(a, 0), static_cast<Element>(a)});
    }
  }

  {
    Collector c{report.violations, cap};
    for (int slot = 1; slot <= n && !c.full(); ++slot) {
      const bool module_slot = slot == j;
      const int vr = module_slot ? k : s.m;
      std::vector<int> rest_radix;
      std::vector<int> rest_slots;
      for (int t = 1; t <= n; ++t)
        if (t != slot) {
          rest_slots.push_back(t);
          rest_radix.push_back(t == j ? k : s.m);
        }
      for (int x = 0; x < vr && !c.full(); ++x)
        for (int xp = 0; xp < vr && !c.full(); ++xp) {
          std::vector<int> rest(rest_radix.size(), 0);
          do {
            std::vector<int> args(static_cast<std::size_t>(n), 0);
            for (std::size_t t = 0; t < rest_slots.size(); ++t)
              args[static_cast<std::size_t>(rest_slots[t] - 1)] = rest[t];
            for (std::size_t g = 0; g < gt && !c.full(); ++g) {
              int sum = module_slot ? mod.madd.at(x, xp) : s.add_at(x, xp);
              args[static_cast<std::size_t>(slot - 1)] = sum;
              Element lhs = mod.act(g, args);
              args[static_cast<std::size_t>(slot - 1)] = x;
              Element vx = mod.act(g, args);
              args[static_cast<std::size_t>(slot - 1)] = xp;
              Element vxp = mod.act(g, args);
              Element rhs = mod.madd.at(vx, vxp);
              if (lhs != rhs) {
                std::vector<int> w{x, xp};
                w.insert(w.end(), rest.begin(), rest.end());
                auto gsd = decode_gamma(s, g);
                w.insert(w.end(), gsd.begin(), gsd.end());
                c.add({Axiom::A2, slot, std::move(w), lhs, rhs});
              }
            }
            if (c.full()) break;
          } while (next_tuple(rest, rest_radix));
        }
    }
  }

  {
    Collector c{report.violations, cap};
    for (int slot = 1; slot <= n && !c.full(); ++slot) {
      std::vector<int> rest_radix;
      std::vector<int> rest_slots;
      for (int t = 1; t <= n; ++t)
        if (t != slot) {
          rest_slots.push_back(t);
          rest_radix.push_back(t == j ? k : s.m);
        }
      std::vector<int> rest(rest_radix.size(), 0);
      do {
        std::vector<int> args(static_cast<std::size_t>(n), 0);
        for (std::size_t t = 0; t < rest_slots.size(); ++t)
          args[static_cast<std::size_t>(rest_slots[t] - 1)] = rest[t];
        args[static_cast<std::size_t>(slot - 1)] = 0;
        for (std::size_t g = 0; g < gt && !c.full(); ++g) {
          Element v = mod.act(g, args);
          if (v != 0) {
            std::vector<int> w(args.begin(), args.end());
            auto gsd = decode_gamma(s, g);
            w.insert(w.end(), gsd.begin(), gsd.end());
            c.add({Axiom::A3, slot, std::move(w), v, 0});
          }
        }
        if (c.full()) break;
      } while (next_tuple(rest, rest_radix));
    }
  }

  {
    Collector c{report.violations, cap};
    std::vector<int> positions{j, 2 * j - 1, j + n - 1};
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (int p : positions) {
      if (c.full()) break;
      auto windows = typed_windows(n, j, p);
      if (windows.size() < 2) continue;
      std::vector<int> gs(static_cast<std::size_t>(2 * (n - 1)), 0);
      std::vector<int> gs_radix(gs.size(), s.r);
      std::vector<int> vs_radix(static_cast<std::size_t>(2 * n - 1), s.m);
      vs_radix[static_cast<std::size_t>(p - 1)] = k;
      do {
        std::vector<int> vs(vs_radix.size(), 0);
        do {
          Element ref = eval_window_at(mod, p, gs, vs, windows.front());
          if (s.assoc_mode == AssocMode::PaperEnds) {
            Element other = eval_window_at(mod, p, gs, vs, windows.back());
            if (ref != other) {
              std::vector<int> w{p};
              w.insert(w.end(), gs.begin(), gs.end());
              w.insert(w.end(), vs.begin(), vs.end());
              c.add({Axiom::A4, windows.back(), std::move(w), ref, other});
            }
          } else {
            for (std::size_t t = 1; t < windows.size() && !c.full(); ++t) {
              Element other = eval_window_at(mod, p, gs, vs, windows[t]);
              if (ref != other) {
                std::vector<int> w{p};
                w.insert(w.end(), gs.begin(), gs.end());
                w.insert(w.end(), vs.begin(), vs.end());
                c.add({Axiom::A4, windows[t], std::move(w), ref, other});
              }
            }
          }
          if (c.full()) break;
        } while (next_tuple(vs, vs_radix));
        if (c.full()) break;
      } while (next_tuple(gs, gs_radix));
    }
  }

  report.valid = report.violations.empty();
  return report;
}

namespace {

std::pair<std::vector<Element>, std::vector<std::vector<Element>>> canonical_module_key(
    const ModuleStructure& mod) {
  std::vector<int> perm(static_cast<std::size_t>(mod.k));
  for (int i = 0; i < mod.k; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::pair<std::vector<Element>, std::vector<std::vector<Element>>> best{mod.madd.cells,
                                                                          mod.action};
  if (mod.k <= 2) return best;
  std::vector<int> inv(perm.size());
  do {
    std::vector<Element> madd(mod.madd.cells.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    for (int a = 0; a < mod.k; ++a)
      for (int b = 0; b < mod.k; ++b)
        madd[static_cast<std::size_t>(a) * static_cast<std::size_t>(mod.k) +
             static_cast<std::size_t>(b)] =
            static_cast<Element>(perm[static_cast<std::size_t>(mod.madd.at(inv[static_cast<std::size_t>(a)],
                                                                           inv[static_cast<std::size_t>(b)]))]);
    std::vector<std::vector<Element>> action(mod.action.size());
    const std::size_t bases = ipow(mod.base.m, mod.base.n - 1);
    for (std::size_t g = 0; g < mod.action.size(); ++g) {
      action[g].resize(mod.action[g].size());
      for (std::size_t b = 0; b < bases; ++b)
        for (int u = 0; u < mod.k; ++u)
          action[g][b * static_cast<std::size_t>(mod.k) + static_cast<std::size_t>(u)] =
              static_cast<Element>(
                  perm[mod.action[g][b * static_cast<std::size_t>(mod.k) +
                                     static_cast<std::size_t>(inv[static_cast<std::size_t>(u)])]]);
    }
    auto key = std::make_pair(std::move(madd), std::move(action));
    if (key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

}  // namespace

std::vector<ModuleStructure> enumerate_modules(const GammaSemiring& s, int j, int k_max) {
  check_shape(s);
  if (j < 1 || j > s.n) throw UsageError("module slot out of range");
  if (k_max < 1) throw UsageError("module carrier bound must be positive");
  if (k_max > 3) throw CapacityError("module carriers beyond 3 are not attempted");

  std::vector<ModuleStructure> out;
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t bases = ipow(s.m, s.n - 1);

  for (int k = 1; k <= k_max; ++k) {
    // Free cells: all base arguments and the module element nonzero.
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;  // (gamma, cell)
    {
      std::vector<int> base_vals(static_cast<std::size_t>(s.n - 1), 0);
      for (std::size_t b = 0; b < bases; ++b) {
        std::size_t rem = b;
        bool nonzero = true;
        for (std::size_t t = base_vals.size(); t-- > 0;) {
          base_vals[t] = static_cast<int>(rem % static_cast<std::size_t>(s.m));
          rem /= static_cast<std::size_t>(s.m);
          nonzero = nonzero && base_vals[t] != 0;
        }
        if (!nonzero) continue;
        for (std::size_t g = 0; g < gt; ++g)
          for (int u = 1; u < k; ++u)
            free_cells.emplace_back(g, b * static_cast<std::size_t>(k) + static_cast<std::size_t>(u));
      }
      std::sort(free_cells.begin(), free_cells.end());
    }
    long double candidates = 1;
    for (std::size_t t = 0; t < free_cells.size(); ++t) candidates *= k;
    if (candidates > 2e6L) throw CapacityError("module action search space too large");

    std::set<std::pair<std::vector<Element>, std::vector<std::vector<Element>>>> seen;
    for (const auto& madd : enumerate_additive(k)) {
      ModuleStructure mod;
      mod.base = s;
      mod.j = j;
      mod.k = k;
      mod.madd = madd;
      mod.action.assign(gt, std::vector<Element>(bases * static_cast<std::size_t>(k), 0));
      std::vector<int> assign(free_cells.size(), 0);
      std::vector<int> radix(free_cells.size(), k);
      bool more = true;
      while (more) {
        for (std::size_t t = 0; t < free_cells.size(); ++t)
          mod.action[free_cells[t].first][free_cells[t].second] = static_cast<Element>(assign[t]);
        if (validate_module(mod).valid) {
          auto key = canonical_module_key(mod);
          if (seen.insert(std::move(key)).second) out.push_back(mod);
        }
        more = !free_cells.empty() && next_tuple(assign, radix);
        if (free_cells.empty()) break;
      }
    }
  }
  return out;
}

std::vector<Mask> submodules(const ModuleStructure& mod) {
  std::vector<Mask> out;
  const std::size_t gt = mod.base.gamma_tuple_count();
  const std::size_t bases = ipow(mod.base.m, mod.base.n - 1);
  for (Mask bits = 1; bits <= full_mask(mod.k); ++bits) {
    if (!mask_has(bits, 0)) continue;
    bool closed = true;
    for (int a = 0; a < mod.k && closed; ++a)
      for (int b = a; b < mod.k && closed; ++b)
        if (mask_has(bits, a) && mask_has(bits, b) && !mask_has(bits, mod.madd.at(a, b)))
          closed = false;
    for (std::size_t g = 0; g < gt && closed; ++g)
      for (std::size_t b = 0; b < bases && closed; ++b)
        for (int u = 0; u < mod.k && closed; ++u)
          if (mask_has(bits, u) &&
              !mask_has(bits, mod.action[g][b * static_cast<std::size_t>(mod.k) +
                                            static_cast<std::size_t>(u)]))
            closed = false;
    if (closed) out.push_back(bits);
  }
  return out;
}

bool is_simple(const ModuleStructure& mod) {
  return mod.k > 1 && submodules(mod).size() == 2;
}

AnnihilatorSet annihilators(const ModuleStructure& mod) {
  const GammaSemiring& s = mod.base;
  const std::size_t gt = s.gamma_tuple_count();
  std::vector<int> base_slots;
  for (int t = 1; t <= s.n; ++t)
    if (t != mod.j) base_slots.push_back(t);

  auto kills_from = [&](int a, const std::vector<int>& slots) {
    for (int slot : slots) {
      std::vector<int> radix;
      std::vector<int> other_slots;
      for (int t = 1; t <= s.n; ++t)
        if (t != slot) {
          other_slots.push_back(t);
          radix.push_back(t == mod.j ? mod.k : s.m);
        }
      std::vector<int> rest(radix.size(), 0);
      do {
        std::vector<int> args(static_cast<std::size_t>(s.n), 0);
        args[static_cast<std::size_t>(slot - 1)] = a;
        for (std::size_t t = 0; t < other_slots.size(); ++t)
          args[static_cast<std::size_t>(other_slots[t] - 1)] = rest[t];
        for (std::size_t g = 0; g < gt; ++g)
          if (mod.act(g, args) != 0) return false;
      } while (next_tuple(rest, radix));
    }
    return true;
  };

  std::vector<int> left_slots, right_slots;
  for (int t : base_slots) (t < mod.j ? left_slots : right_slots).push_back(t);

  AnnihilatorSet out;
  for (int a = 0; a < s.m; ++a) {
    if (kills_from(a, base_slots)) out.two_sided.bits |= Mask{1} << a;
    if (kills_from(a, left_slots)) out.left.bits |= Mask{1} << a;
    if (kills_from(a, right_slots)) out.right.bits |= Mask{1} << a;
  }
  for (auto kind : {IdealKind::left(), IdealKind::right(), IdealKind::two_sided()}) {
    if (is_ideal(s, out.two_sided.bits, kind)) out.two_sided.tag_kind(kind);
    if (is_ideal(s, out.left.bits, kind)) out.left.tag_kind(kind);
    if (is_ideal(s, out.right.bits, kind)) out.right.tag_kind(kind);
  }
  return out;
}

namespace {

std::string module_label(const ModuleStructure& mod, std::size_t index) {
  std::ostringstream os;
  os << "module#" << index << " k=" << mod.k << " j=" << mod.j;
  return os.str();
}

}  // namespace

PrimitiveIdealReport primitive_ideals(const GammaSemiring& s, int j, int k_max) {
  PrimitiveIdealReport out;
  out.k_max = k_max;
  {
    std::ostringstream os;
    os << "within search bound k_max=" << k_max;
    out.bound_note = os.str();
  }
  auto mods = enumerate_modules(s, j, k_max);
  std::map<Mask, ModuleStructure> found;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (!is_simple(mods[i])) continue;
    Mask ann = annihilators(mods[i]).two_sided.bits;
    if (ann == full_mask(s.m)) {
      out.excluded.push_back({"degenerate-annihilator", module_label(mods[i], i),
                              AuditStatus::Vacuous, "annihilator is the full carrier"});
      continue;
    }
    if (!is_ideal(s, ann, IdealKind::two_sided())) {
      out.excluded.push_back({"degenerate-annihilator", module_label(mods[i], i),
                              AuditStatus::Vacuous,
                              "annihilator " + mask_to_string(ann, s.m) +
                                  " fails the two-sided ideal laws"});
      continue;
    }
    if (!found.count(ann)) found.emplace(ann, mods[i]);
  }
  for (auto& [mask, witness] : found) out.ideals.push_back({mask, witness});
  return out;
}

std::vector<AuditEntry> audit_representation_theorems(const GammaSemiring& s, int j, int k_max) {
  std::vector<AuditEntry> out;
  auto mods = enumerate_modules(s, j, k_max);

  {
    // Claimed: the two-sided annihilator of any module satisfies the
    // two-sided ideal laws.
    std::string witness;
    for (std::size_t i = 0; i < mods.size() && witness.empty(); ++i) {
      auto ann = annihilators(mods[i]);
      if ((ann.two_sided.bits & ~ann.left.bits) != 0 ||
          (ann.two_sided.bits & ~ann.right.bits) != 0)
        witness = module_label(mods[i], i) + ": two-sided annihilator escapes a one-sided one";
      else if (!is_ideal(s, ann.two_sided.bits, IdealKind::two_sided()))
        witness = module_label(mods[i], i) + ": annihilator " +
                  mask_to_string(ann.two_sided.bits, s.m) + " fails the two-sided ideal laws";
    }
    out.push_back(witness.empty() ? audit_pass("annihilator-two-sided", "enumerated modules")
                                  : audit_fail("annihilator-two-sided", "enumerated modules", witness));
  }

  auto prims = primitive_ideals(s, j, k_max);

  {
    std::string witness;
    for (const auto& entry : prims.ideals) {
      IdealSubset p{entry.ideal, {}};
      if (!is_prime(s, p, Side::Two).holds) {
        witness = mask_to_string(entry.ideal, s.m) + " is primitive but not prime";
        break;
      }
    }
    if (prims.ideals.empty())
      out.push_back(audit_vacuous("primitive-prime", prims.bound_note));
    else
      out.push_back(witness.empty() ? audit_pass("primitive-prime", prims.bound_note)
                                    : audit_fail("primitive-prime", prims.bound_note, witness));
  }

  {
    auto jac = jacobson_radical(s, Side::Two);
    Mask inter = full_mask(s.m);
    for (const auto& entry : prims.ideals) inter &= entry.ideal;
    if (prims.ideals.empty() && jac.empty_family) {
      out.push_back(audit_vacuous("jacobson-vs-primitives", "both families empty, " + prims.bound_note));
    } else if (jac.bits == inter) {
      out.push_back(audit_pass("jacobson-vs-primitives", "equal " + prims.bound_note));
    } else {
      std::ostringstream os;
      os << "jacobson=" << mask_to_string(jac.bits, s.m)
         << (jac.empty_family ? " (empty family)" : "")
         << " intersection=" << mask_to_string(inter, s.m)
         << (prims.ideals.empty() ? " (no primitive ideals)" : "") << ", differs "
         << prims.bound_note;
      out.push_back(audit_fail("jacobson-vs-primitives", "two_sided", os.str()));
    }
  }

  {
    // For every surjective module homomorphism between enumerated modules the
    // kernel-congruence quotient must match the image through the induced map.
    std::string witness;
    const std::size_t bases = ipow(s.m, s.n - 1);
    const std::size_t gt = s.gamma_tuple_count();
    for (std::size_t a = 0; a < mods.size() && witness.empty(); ++a)
      for (std::size_t b = 0; b < mods.size() && witness.empty(); ++b) {
        const auto& A = mods[a];
        const auto& B = mods[b];
        std::vector<int> phi(static_cast<std::size_t>(A.k), 0);
        std::vector<int> radix(static_cast<std::size_t>(A.k), B.k);
        bool more = true;
        while (more && witness.empty()) {
          bool hom = phi[0] == 0;
          for (int x = 0; x < A.k && hom; ++x)
            for (int y = 0; y < A.k && hom; ++y)
              hom = phi[static_cast<std::size_t>(A.madd.at(x, y))] ==
                    B.madd.at(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]);
          for (std::size_t g = 0; g < gt && hom; ++g)
            for (std::size_t c = 0; c < bases && hom; ++c)
              for (int u = 0; u < A.k && hom; ++u)
                hom = phi[A.action[g][c * static_cast<std::size_t>(A.k) +
                                      static_cast<std::size_t>(u)]] ==
                      B.action[g][c * static_cast<std::size_t>(B.k) +
                                  static_cast<std::size_t>(phi[static_cast<std::size_t>(u)])];
          Mask image = 0;
          for (int u = 0; u < A.k; ++u) image |= Mask{1} << phi[static_cast<std::size_t>(u)];
          if (hom && image == full_mask(B.k)) {
            // Kernel classes keyed by phi value; representative = least member.
            std::vector<int> reps;
            for (int u = 0; u < A.k; ++u) {
              bool fresh = true;
              for (int r : reps)
                if (phi[static_cast<std::size_t>(r)] == phi[static_cast<std::size_t>(u)]) fresh = false;
              if (fresh) reps.push_back(u);
            }
            bool ok = reps.size() == static_cast<std::size_t>(B.k);
            for (std::size_t c1 = 0; c1 < reps.size() && ok; ++c1)
              for (std::size_t c2 = 0; c2 < reps.size() && ok; ++c2) {
                int sum = A.madd.at(reps[c1], reps[c2]);
                ok = phi[static_cast<std::size_t>(sum)] ==
                     B.madd.at(phi[static_cast<std::size_t>(reps[c1])],
                               phi[static_cast<std::size_t>(reps[c2])]);
              }
            for (std::size_t g = 0; g < gt && ok; ++g)
              for (std::size_t c = 0; c < bases && ok; ++c)
                for (std::size_t c1 = 0; c1 < reps.size() && ok; ++c1) {
                  int img = A.action[g][c * static_cast<std::size_t>(A.k) +
                                        static_cast<std::size_t>(reps[c1])];
                  ok = phi[static_cast<std::size_t>(img)] ==
                       B.action[g][c * static_cast<std::size_t>(B.k) +
                                   static_cast<std::size_t>(phi[static_cast<std::size_t>(reps[c1])])];
                }
            if (!ok) {
              std::ostringstream os;
              os << module_label(A, a) << " -> " << module_label(B, b)
                 << ": kernel quotient does not match the image";
              witness = os.str();
            }
          }
          more = next_tuple(phi, radix);
        }
      }
    out.push_back(witness.empty()
                      ? audit_pass("first-isomorphism", "surjective homs between enumerated modules")
                      : audit_fail("first-isomorphism", "surjective homs between enumerated modules",
                                   witness));
  }

  {
    // A family of simple modules with trivial joint annihilator must tell any
    // two base elements apart through some action placement.
    std::vector<std::size_t> simple_idx;
    Mask joint = full_mask(s.m);
    for (std::size_t i = 0; i < mods.size(); ++i)
      if (is_simple(mods[i])) {
        simple_idx.push_back(i);
        joint &= annihilators(mods[i]).two_sided.bits;
      }
    if (simple_idx.empty() || joint != 1) {
      out.push_back(audit_vacuous("density-separation",
                                  "no faithful simple family " + prims.bound_note));
    } else {
      std::string witness;
      const std::size_t gt = s.gamma_tuple_count();
      for (int x = 0; x < s.m && witness.empty(); ++x)
        for (int y = x + 1; y < s.m && witness.empty(); ++y) {
          bool separated = false;
          for (std::size_t i : simple_idx) {
            const auto& M = mods[i];
            for (int slot = 1; slot <= s.n && !separated; ++slot) {
              if (slot == M.j) continue;
              std::vector<int> radix;
              std::vector<int> other_slots;
              for (int t = 1; t <= s.n; ++t)
                if (t != slot) {
                  other_slots.push_back(t);
                  radix.push_back(t == M.j ? M.k : s.m);
                }
              std::vector<int> rest(radix.size(), 0);
              do {
                std::vector<int> args(static_cast<std::size_t>(s.n), 0);
                for (std::size_t t = 0; t < other_slots.size(); ++t)
                  args[static_cast<std::size_t>(other_slots[t] - 1)] = rest[t];
                for (std::size_t g = 0; g < gt && !separated; ++g) {
                  args[static_cast<std::size_t>(slot - 1)] = x;
                  Element vx = M.act(g, args);
                  args[static_cast<std::size_t>(slot - 1)] = y;
                  separated = vx != M.act(g, args);
                }
              } while (!separated && next_tuple(rest, radix));
            }
            if (separated) break;
          }
          if (!separated) {
            std::ostringstream os;
            os << "elements " << x << " and " << y
               << " act identically on every enumerated simple module";
            witness = os.str();
          }
        }
      out.push_back(witness.empty() ? audit_pass("density-separation", prims.bound_note)
                                    : audit_fail("density-separation", prims.bound_note, witness));
    }
  }

  return out;
}

}  // namespace gsr
