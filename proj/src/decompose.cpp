#include "gsr/decompose.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gsr/modules.hpp"
#include "gsr/primes.hpp"
#include "gsr/spectra.hpp"

namespace gsr {

bool are_comaximal(const GammaSemiring& s, Mask i, Mask j) {
  for (Mask b : {i, j})
    if (!is_ideal(s, b, IdealKind::two_sided()))
      throw UsageError("are_comaximal requires two-sided ideals");
  IdealSubset a{i, {IdealKind::two_sided()}};
  IdealSubset b{j, {IdealKind::two_sided()}};
  return sum_ideals(s, a, b).bits == full_mask(s.m);
}

namespace {

std::string family_str(const GammaSemiring& s, const std::vector<Mask>& ideals) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (i) os << ',';
    os << mask_to_string(ideals[i], s.m);
  }
  os << ']';
  return os.str();
}

}  // namespace

CrtReport crt_check(const GammaSemiring& s, const std::vector<Mask>& ideals) {
  CrtReport rep;
  rep.ideals = ideals;
  if (ideals.empty()) {
    rep.witnesses.push_back("empty ideal family");
    return rep;
  }
  for (Mask i : ideals)
    if (!is_ideal(s, i, IdealKind::two_sided())) {
      rep.witnesses.push_back(mask_to_string(i, s.m) + " is not a two-sided ideal");
      return rep;
    }
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = a + 1; b < ideals.size(); ++b)
      if (!are_comaximal(s, ideals[a], ideals[b])) {
        rep.witnesses.push_back(mask_to_string(ideals[a], s.m) + " and " +
                                mask_to_string(ideals[b], s.m) + " are not comaximal");
        return rep;
      }
  rep.pairwise_comaximal = true;

  std::size_t prod_m = 1;
  for (Mask i : ideals) {
    rep.factors.push_back(bourne_quotient(s, i));
    prod_m *= static_cast<std::size_t>(rep.factors.back().quotient.m);
  }
  if (prod_m > 200) throw CapacityError("product carrier exceeds 200 elements");

  auto encode = [&](const std::vector<int>& tuple) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < rep.factors.size(); ++f)
      idx = idx * static_cast<std::size_t>(rep.factors[f].quotient.m) +
            static_cast<std::size_t>(tuple[f]);
    return idx;
  };
  auto decode = [&](std::size_t idx) {
    std::vector<int> tuple(rep.factors.size());
    for (std::size_t f = rep.factors.size(); f-- > 0;) {
      int km = rep.factors[f].quotient.m;
      tuple[f] = static_cast<int>(idx % static_cast<std::size_t>(km));
      idx /= static_cast<std::size_t>(km);
    }
    return tuple;
  };

  GammaSemiring& prod = rep.product;
  prod.m = static_cast<int>(prod_m);
  prod.n = s.n;
  prod.r = s.r;
  prod.assoc_mode = s.assoc_mode;
  prod.add.m = prod.m;
  prod.add.cells.resize(prod_m * prod_m);
  for (std::size_t a = 0; a < prod_m; ++a) {
    auto ta = decode(a);
    for (std::size_t b = 0; b < prod_m; ++b) {
      auto tb = decode(b);
      std::vector<int> tc(rep.factors.size());
      for (std::size_t f = 0; f < rep.factors.size(); ++f)
        tc[f] = rep.factors[f].quotient.add_at(ta[f], tb[f]);
      prod.add.cells[a * prod_m + b] = static_cast<Element>(encode(tc));
    }
  }
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = ipow(prod_m, s.n);
  prod.mu.assign(gt, std::vector<Element>(cells, 0));
  for (std::size_t g = 0; g < gt; ++g)
    for (std::size_t cell = 0; cell < cells; ++cell) {
      std::vector<int> args(static_cast<std::size_t>(s.n));
      std::size_t rem = cell;
      for (std::size_t t = args.size(); t-- > 0;) {
        args[t] = static_cast<int>(rem % prod_m);
        rem /= prod_m;
      }
      std::vector<int> value(rep.factors.size());
      for (std::size_t f = 0; f < rep.factors.size(); ++f) {
        std::vector<int> fargs(args.size());
        for (std::size_t t = 0; t < args.size(); ++t)
          fargs[t] = decode(static_cast<std::size_t>(args[t]))[f];
        value[f] = rep.factors[f].quotient.mu_at(g, mu_cell_index(rep.factors[f].quotient, fargs));
      }
      prod.mu[g][cell] = static_cast<Element>(encode(value));
    }

  rep.phi.resize(static_cast<std::size_t>(s.m));
  for (int a = 0; a < s.m; ++a) {
    std::vector<int> tuple(rep.factors.size());
    for (std::size_t f = 0; f < rep.factors.size(); ++f)
      tuple[f] = rep.factors[f].class_of[static_cast<std::size_t>(a)];
    rep.phi[static_cast<std::size_t>(a)] = static_cast<Element>(encode(tuple));
  }

  Homomorphism f{s, prod, rep.phi};
  rep.map_is_homomorphism = is_homomorphism(f);
  if (!rep.map_is_homomorphism) rep.witnesses.push_back("class-tuple map is not a homomorphism");

  std::vector<bool> hit(prod_m, false);
  for (Element v : rep.phi) hit[v] = true;
  rep.surjective = std::find(hit.begin(), hit.end(), false) == hit.end();
  if (!rep.surjective) {
    for (std::size_t v = 0; v < prod_m; ++v)
      if (!hit[v]) {
        rep.witnesses.push_back("product element " + std::to_string(v) + " has no preimage");
        break;
      }
  }

  Mask inter = full_mask(s.m);
  for (Mask i : ideals) inter &= i;
  auto bq = bourne_quotient(s, inter);
  rep.kernel_equals_intersection = true;
  for (int a = 0; a < s.m && rep.kernel_equals_intersection; ++a)
    for (int b = 0; b < s.m && rep.kernel_equals_intersection; ++b) {
      bool same_phi = rep.phi[static_cast<std::size_t>(a)] == rep.phi[static_cast<std::size_t>(b)];
      bool same_cls = bq.class_of[static_cast<std::size_t>(a)] == bq.class_of[static_cast<std::size_t>(b)];
      if (same_phi != same_cls) {
        rep.kernel_equals_intersection = false;
        std::ostringstream os;
        os << "pair (" << a << ',' << b << ") kernel=" << (same_phi ? "yes" : "no")
           << " intersection-congruence=" << (same_cls ? "yes" : "no");
        rep.witnesses.push_back(os.str());
      }
    }
  return rep;
}

AuditEntry wedderburn_check(const GammaSemiring& s, int j, int k_max) {
  auto jac = jacobson_radical(s, Side::Two);
  std::ostringstream ctx;
  ctx << "j=" << j << " k_max=" << k_max;
  if (jac.empty_family || jac.bits != 1)
    return audit_vacuous("wedderburn", ctx.str() + ", jacobson radical is not zero");
  auto prims = primitive_ideals(s, j, k_max);
  if (prims.ideals.empty())
    return audit_vacuous("wedderburn", ctx.str() + ", no primitive ideals within bound");

  std::vector<Mask> minimal;
  for (const auto& a : prims.ideals) {
    bool is_min = true;
    for (const auto& b : prims.ideals)
      if (b.ideal != a.ideal && (b.ideal & ~a.ideal) == 0) is_min = false;
    if (is_min) minimal.push_back(a.ideal);
  }

  auto crt = crt_check(s, minimal);
  if (!crt.all_pass()) {
    std::string w = crt.witnesses.empty() ? "crt stage failed" : crt.witnesses.front();
    return audit_fail("wedderburn", ctx.str(), "crt over " + family_str(s, minimal) + ": " + w);
  }
  std::set<Element> images(crt.phi.begin(), crt.phi.end());
  if (images.size() != crt.phi.size()) {
    return audit_fail("wedderburn", ctx.str(),
                      "product map over " + family_str(s, minimal) + " does not separate points");
  }
  std::ostringstream os;
  os << "factors=" << minimal.size() << " matching " << minimal.size()
     << " minimal primitive ideals, " << prims.bound_note;
  return audit_pass("wedderburn", ctx.str() + ", " + os.str());
}

std::vector<Element> central_idempotents(const GammaSemiring& s) {
  std::vector<Element> out;
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = s.mu_table_size();
  const int lo = s.m == 1 ? 0 : 1;
  for (int e = lo; e < s.m; ++e) {
    bool idem = true;
    std::vector<int> diag(static_cast<std::size_t>(s.n), e);
    const std::size_t dcell = mu_cell_index(s, diag);
    for (std::size_t g = 0; g < gt && idem; ++g) idem = s.mu_at(g, dcell) == e;
    if (!idem) continue;
    bool central = true;
    for (std::size_t g = 0; g < gt && central; ++g)
      for (std::size_t cell = 0; cell < cells && central; ++cell) {
        auto args = decode_args(s, cell);
        for (int i = 0; i + 1 < s.n && central; ++i) {
          if (args[static_cast<std::size_t>(i)] != e && args[static_cast<std::size_t>(i + 1)] != e)
            continue;
          std::vector<int> swapped = args;
          std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
          central = s.mu_at(g, cell) == s.mu_at(g, mu_cell_index(s, swapped));
        }
      }
    if (central) out.push_back(static_cast<Element>(e));
  }
  return out;
}

PinnedResult pinned_ternary(const GammaSemiring& s, const PinningSpec& spec) {
  check_shape(s);
  if (s.n <= 3) throw UsageError("pinning requires arity above 3");
  auto centrals = central_idempotents(s);
  if (std::find(centrals.begin(), centrals.end(), spec.e) == centrals.end())
    throw UsageError("pinning element is not a central idempotent; see central_idempotents");

  const std::size_t gt = s.gamma_tuple_count();
  std::vector<std::pair<int, int>> gmap = spec.gamma_map;
  if (gmap.empty()) {
    gmap.resize(gt);
    for (std::size_t g = 0; g < gt; ++g) {
      auto digits = decode_gamma(s, g);
      gmap[g] = {digits.front(), digits.back()};
    }
  }
  if (gmap.size() != gt) throw UsageError("gamma map must cover every source gamma tuple");
  std::vector<std::vector<std::size_t>> preimages(static_cast<std::size_t>(s.r) *
                                                  static_cast<std::size_t>(s.r));
  for (std::size_t g = 0; g < gt; ++g) {
    auto [a, b] = gmap[g];
    if (a < 0 || a >= s.r || b < 0 || b >= s.r) throw UsageError("gamma map value out of range");
    preimages[static_cast<std::size_t>(a) * static_cast<std::size_t>(s.r) +
              static_cast<std::size_t>(b)]
        .push_back(g);
  }
  for (const auto& pre : preimages)
    if (pre.empty()) throw UsageError("gamma map must reach every ternary gamma pair");

  PinnedResult out;
  GammaSemiring& t = out.ternary;
  t.m = s.m;
  t.n = 3;
  t.r = s.r;
  t.assoc_mode = s.assoc_mode;
  t.add = s.add;
  const std::size_t tcells = ipow(s.m, 3);
  t.mu.assign(static_cast<std::size_t>(s.r) * static_cast<std::size_t>(s.r),
              std::vector<Element>(tcells, 0));

  std::string consistency;
  for (std::size_t pair = 0; pair < preimages.size(); ++pair)
    for (std::size_t cell = 0; cell < tcells; ++cell) {
      auto targs = decode_args(t, cell);
      std::vector<int> args(static_cast<std::size_t>(s.n), spec.e);
      args.front() = targs[0];
      args[static_cast<std::size_t>(s.n - 2)] = targs[1];
      args.back() = targs[2];
      const std::size_t scell = mu_cell_index(s, args);
      Element v = s.mu_at(preimages[pair].front(), scell);
      t.mu[pair][cell] = v;
      if (consistency.empty())
        for (std::size_t g : preimages[pair])
          if (s.mu_at(g, scell) != v) {
            std::ostringstream os;
            os << "pair_rank=" << pair << " cell args (" << targs[0] << ',' << targs[1] << ','
               << targs[2] << ") differ across gamma preimages";
            consistency = os.str();
            break;
          }
    }
  out.audits.push_back(consistency.empty()
                           ? audit_pass("pinned-gamma-consistency", "all preimages")
                           : audit_fail("pinned-gamma-consistency", "all preimages", consistency));

  {
    auto rep = validate(t, 1);
    if (rep.valid) {
      out.audits.push_back(audit_pass("pinned-associativity", "ternary table"));
    } else {
      const auto& v = rep.violations.front();
      std::ostringstream os;
      os << "axiom A" << static_cast<int>(v.axiom) + 1 << " slot " << v.slot << " lhs="
         << static_cast<int>(v.lhs) << " rhs=" << static_cast<int>(v.rhs);
      out.audits.push_back(audit_fail("pinned-associativity", "ternary table", os.str()));
    }
  }

  {
    std::string witness;
    for (int th = 1; th <= 3 && witness.empty(); ++th) {
      for (const auto& ideal : all_ideals(s, IdealKind::threshold(th)))
        if (!is_ideal(t, ideal.bits, IdealKind::threshold(th))) {
          witness = mask_to_string(ideal.bits, s.m) + " fails threshold(" +
                    std::to_string(th) + ") after pinning";
          break;
        }
    }
    out.audits.push_back(witness.empty()
                             ? audit_pass("pinned-threshold-transfer", "thresholds 1..3")
                             : audit_fail("pinned-threshold-transfer", "thresholds 1..3", witness));
  }

  {
    std::string witness;
    for (const auto& ideal : all_ideals(s, IdealKind::two_sided())) {
      if (!is_ideal(t, ideal.bits, IdealKind::two_sided())) {
        witness = mask_to_string(ideal.bits, s.m) + " is not two-sided after pinning";
        break;
      }
      Mask src = diagonal_radical(s, ideal.bits);
      Mask dst = diagonal_radical(t, ideal.bits);
      if (src != dst) {
        witness = "i=" + mask_to_string(ideal.bits, s.m) + " source=" + mask_to_string(src, s.m) +
                  " pinned=" + mask_to_string(dst, s.m);
        break;
      }
    }
    out.audits.push_back(witness.empty()
                             ? audit_pass("pinned-diagonal-radical", "two-sided ideals")
                             : audit_fail("pinned-diagonal-radical", "two-sided ideals", witness));
  }

  {
    auto js = jacobson_radical(s, Side::Two);
    auto jt = jacobson_radical(t, Side::Two);
    if (js.bits == jt.bits && js.empty_family == jt.empty_family) {
      out.audits.push_back(audit_pass("pinned-jacobson", "two_sided"));
    } else {
      std::ostringstream os;
      os << "source=" << mask_to_string(js.bits, s.m) << (js.empty_family ? " (empty family)" : "")
         << " pinned=" << mask_to_string(jt.bits, s.m) << (jt.empty_family ? " (empty family)" : "");
      out.audits.push_back(audit_fail("pinned-jacobson", "two_sided", os.str()));
    }
  }

  return out;
}

AuditEntry spectra_disjoint_union_check(const GammaSemiring& s, const std::vector<Mask>& ideals) {
  const std::string ctx = family_str(s, ideals);
  auto crt = crt_check(s, ideals);
  if (!crt.all_pass()) return audit_vacuous("spectra-disjoint-union", ctx + ", crt did not pass");

  Spectrum whole = spectrum(s, Side::Two);
  std::vector<std::vector<Mask>> pulled(crt.factors.size());
  std::set<Mask> seen;
  std::string witness;
  for (std::size_t f = 0; f < crt.factors.size() && witness.empty(); ++f) {
    Spectrum fs = spectrum(crt.factors[f].quotient, Side::Two);
    for (const auto& p : fs.points) {
      Mask pb = pullback_ideal(crt.factors[f].projection, p.bits);
      pulled[f].push_back(pb);
      bool in_whole = false;
      for (const auto& q : whole.points) in_whole = in_whole || q.bits == pb;
      if (!in_whole) {
        witness = "factor " + std::to_string(f) + " pullback " + mask_to_string(pb, s.m) +
                  " is not a prime of the source";
        break;
      }
      if (!seen.insert(pb).second) {
        witness = "pullback " + mask_to_string(pb, s.m) + " repeats across factors";
        break;
      }
    }
  }
  if (witness.empty() && seen.size() != whole.points.size()) {
    for (const auto& q : whole.points)
      if (!seen.count(q.bits)) {
        witness = "source prime " + mask_to_string(q.bits, s.m) + " missed by every factor";
        break;
      }
  }
  if (witness.empty()) {
    // Vanishing sets must agree factorwise on pushed generators.
    for (Mask a = 0; a <= full_mask(s.m) && witness.empty(); ++a) {
      auto vs = vanishing_set(whole, a).points;
      std::set<Mask> v_bits;
      for (std::size_t i : vs) v_bits.insert(whole.points[i].bits);
      for (std::size_t f = 0; f < crt.factors.size() && witness.empty(); ++f) {
        Mask pushed = 0;
        for (int x = 0; x < s.m; ++x)
          if (mask_has(a, x))
            pushed |= Mask{1} << crt.factors[f].projection.map[static_cast<std::size_t>(x)];
        Spectrum fs = spectrum(crt.factors[f].quotient, Side::Two);
        auto vf = vanishing_set(fs, pushed).points;
        std::set<Mask> vf_bits;
        for (std::size_t i : vf)
          vf_bits.insert(pullback_ideal(crt.factors[f].projection, fs.points[i].bits));
        for (Mask pb : pulled[f]) {
          bool in_whole_v = v_bits.count(pb) != 0;
          bool in_factor_v = vf_bits.count(pb) != 0;
          if (in_whole_v != in_factor_v) {
            witness = "A=" + mask_to_string(a, s.m) + " point " + mask_to_string(pb, s.m) +
                      " disagrees between source and factor " + std::to_string(f);
            break;
          }
        }
      }
    }
  }
  return witness.empty() ? audit_pass("spectra-disjoint-union", ctx)
                         : audit_fail("spectra-disjoint-union", ctx, witness);
}

}  // namespace gsr
