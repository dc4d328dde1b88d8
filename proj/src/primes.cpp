#include "gsr/primes.hpp"

#include <algorithm>
#include <sstream>

namespace gsr {

IdealKind kind_for_side(Side side) {
  switch (side) {
    case Side::Left: return IdealKind::left();
    case Side::Right: return IdealKind::right();
    case Side::Two: return IdealKind::two_sided();
  }
  throw UsageError("unknown side");
}

std::vector<int> prime_slots(const GammaSemiring& s, Side side) {
  std::vector<int> out;
  int lo = side == Side::Left ? 2 : 1;
  int hi = side == Side::Right ? s.n - 1 : s.n;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

namespace {

std::string side_name(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Two: return "two_sided";
  }
  return "?";
}

std::vector<int> tuple_witness(const GammaSemiring& s, std::size_t g, const std::vector<int>& args) {
  std::vector<int> w = decode_gamma(s, g);
  w.insert(w.end(), args.begin(), args.end());
  return w;
}

}  // namespace

CheckResult is_prime(const GammaSemiring& s, const IdealSubset& p, Side side) {
  if (p.bits == full_mask(s.m)) throw UsageError("proper ideal required");
  if (!is_ideal(s, p.bits, kind_for_side(side)))
    throw UsageError("ideal kind does not match the requested side");
  auto slots = prime_slots(s, side);
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = s.mu_table_size();
  for (std::size_t g = 0; g < gt; ++g)
    for (std::size_t cell = 0; cell < cells; ++cell) {
      if (!mask_has(p.bits, s.mu_at(g, cell))) continue;
      auto args = decode_args(s, cell);
      bool discharged = false;
      for (int slot : slots)
        if (mask_has(p.bits, args[static_cast<std::size_t>(slot - 1)])) {
          discharged = true;
          break;
        }
      if (!discharged) return {false, tuple_witness(s, g, args)};
    }
  return {};
}

CheckResult is_semiprime(const GammaSemiring& s, const IdealSubset& q) {
  if (!is_ideal(s, q.bits, IdealKind::two_sided()))
    throw UsageError("is_semiprime requires a two-sided ideal");
  const std::size_t gt = s.gamma_tuple_count();
  for (std::size_t g = 0; g < gt; ++g) {
    auto gs = decode_gamma(s, g);
    for (int a = 0; a < s.m; ++a) {
      if (mask_has(q.bits, a)) continue;
      if (mask_has(q.bits, diagonal(s, static_cast<Element>(a), gs)))
        return {false, tuple_witness(s, g, {a})};
    }
  }
  return {};
}

Element diagonal(const GammaSemiring& s, Element a, const std::vector<int>& gammas) {
  std::vector<int> args(static_cast<std::size_t>(s.n), a);
  return eval_mu(s, gammas, args);
}

Mask diagonal_radical(const GammaSemiring& s, Mask i) {
  if (!is_ideal(s, i, IdealKind::two_sided()))
    throw UsageError("diagonal_radical requires a two-sided ideal");
  const std::size_t gt = s.gamma_tuple_count();
  Mask out = 0;
  for (int a = 0; a < s.m; ++a)
    for (std::size_t g = 0; g < gt; ++g) {
      std::vector<int> args(static_cast<std::size_t>(s.n), a);
      if (mask_has(i, s.mu_at(g, mu_cell_index(s, args)))) {
        out |= Mask{1} << a;
        break;
      }
    }
  return out;
}

std::vector<Mask> side_primes(const GammaSemiring& s, Side side) {
  std::vector<Mask> out;
  for (const auto& ideal : all_ideals(s, kind_for_side(side))) {
    if (ideal.bits == full_mask(s.m)) continue;
    if (is_prime(s, ideal, side).holds) out.push_back(ideal.bits);
  }
  return out;
}

RadicalResult prime_radical(const GammaSemiring& s, Mask i, Side side) {
  if (!is_ideal(s, i, kind_for_side(side)))
    throw UsageError("prime_radical seed must pass the side's ideal kind");
  RadicalResult out;
  for (Mask p : side_primes(s, side))
    if ((i & ~p) == 0) out.family.push_back(p);
  if (out.family.empty()) {
    out.bits = full_mask(s.m);
    out.empty_family = true;
  } else {
    out.bits = full_mask(s.m);
    for (Mask p : out.family) out.bits &= p;
  }
  return out;
}

std::vector<Element> modular_witnesses(const GammaSemiring& s) {
  std::vector<Element> out;
  const std::size_t gt = s.gamma_tuple_count();
  for (int w = 1; w < s.m; ++w) {
    bool ok = true;
    for (int a = 0; a < s.m && ok; ++a) {
      std::vector<int> args(static_cast<std::size_t>(s.n), w);
      args.front() = a;
      args.back() = a;
      std::size_t cell = mu_cell_index(s, args);
      for (std::size_t g = 0; g < gt; ++g)
        if (s.add_at(a, s.mu_at(g, cell)) != a) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(static_cast<Element>(w));
  }
  return out;
}

std::vector<IdealSubset> modular_maximal_ideals(const GammaSemiring& s, Side side) {
  if (modular_witnesses(s).empty()) return {};
  auto ideals = all_ideals(s, kind_for_side(side));
  std::vector<IdealSubset> proper;
  for (const auto& i : ideals)
    if (i.bits != full_mask(s.m)) proper.push_back(i);
  std::vector<IdealSubset> out;
  for (const auto& i : proper) {
    bool maximal = true;
    for (const auto& j : proper)
      if (j.bits != i.bits && (i.bits & ~j.bits) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

RadicalResult jacobson_radical(const GammaSemiring& s, Side side) {
  RadicalResult out;
  for (const auto& i : modular_maximal_ideals(s, side)) out.family.push_back(i.bits);
  out.bits = full_mask(s.m);
  if (out.family.empty())
    out.empty_family = true;
  else
    for (Mask p : out.family) out.bits &= p;
  return out;
}

std::vector<AuditEntry> RadicalReport::discrepancies() const {
  std::vector<AuditEntry> out;
  for (const auto& e : checks)
    if (e.status == AuditStatus::Fail) out.push_back(e);
  return out;
}

namespace {

std::string set_str(const GammaSemiring& s, Mask bits) { return mask_to_string(bits, s.m); }

std::string tuple_str(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

RadicalReport audit_radical_theorems(const GammaSemiring& s) {
  RadicalReport rep;
  rep.prime_left = prime_radical(s, 1, Side::Left);
  rep.prime_right = prime_radical(s, 1, Side::Right);
  rep.prime_two = prime_radical(s, 1, Side::Two);
  rep.jacobson_left = jacobson_radical(s, Side::Left);
  rep.jacobson_right = jacobson_radical(s, Side::Right);
  rep.jacobson_two = jacobson_radical(s, Side::Two);

  auto two = all_ideals(s, IdealKind::two_sided());
  for (const auto& i : two) rep.diagonal_radicals.emplace_back(i.bits, diagonal_radical(s, i.bits));

  {
    // Claimed: the elementwise diagonal set equals the intersection of primes.
    std::string witness;
    for (const auto& i : two) {
      Mask dr = diagonal_radical(s, i.bits);
      auto pr = prime_radical(s, i.bits, Side::Two);
      if (dr != pr.bits) {
        std::ostringstream os;
        os << "i=" << set_str(s, i.bits) << " diagonal=" << set_str(s, dr)
           << " primes=" << set_str(s, pr.bits);
        if (pr.empty_family) os << " (empty family)";
        witness = os.str();
        break;
      }
    }
    rep.checks.push_back(witness.empty()
                             ? audit_pass("diagonal-vs-prime-radical", "two-sided ideals")
                             : audit_fail("diagonal-vs-prime-radical", "two-sided ideals", witness));
  }

  {
    std::string witness;
    for (const auto& q : two) {
      bool sp = is_semiprime(s, q).holds;
      bool fixed = diagonal_radical(s, q.bits) == q.bits;
      if (sp != fixed) {
        std::ostringstream os;
        os << "q=" << set_str(s, q.bits) << " semiprime=" << (sp ? "true" : "false")
           << " diagonal=" << set_str(s, diagonal_radical(s, q.bits));
        witness = os.str();
        break;
      }
    }
    rep.checks.push_back(witness.empty()
                             ? audit_pass("semiprime-fixed-point", "two-sided ideals")
                             : audit_fail("semiprime-fixed-point", "two-sided ideals", witness));
  }

  {
    // Claimed: p is prime exactly when T/p has no all-nonzero tuple with a
    // zero product.
    std::string witness;
    for (const auto& p : two) {
      if (p.bits == full_mask(s.m)) continue;
      bool prime = is_prime(s, p, Side::Two).holds;
      auto q = bourne_quotient(s, p.bits);
      std::vector<int> zd;
      const std::size_t gt = q.quotient.gamma_tuple_count();
      const std::size_t cells = q.quotient.mu_table_size();
      for (std::size_t g = 0; g < gt && zd.empty(); ++g)
        for (std::size_t cell = 0; cell < cells && zd.empty(); ++cell) {
          auto args = decode_args(q.quotient, cell);
          if (std::find(args.begin(), args.end(), 0) != args.end()) continue;
          if (q.quotient.mu_at(g, cell) == 0) zd = tuple_witness(q.quotient, g, args);
        }
      if (prime == zd.empty()) continue;
      std::ostringstream os;
      os << "p=" << set_str(s, p.bits) << " prime=" << (prime ? "true" : "false");
      if (zd.empty())
        os << " but the quotient has no zero tuple";
      else
        os << " quotient tuple " << tuple_str(zd) << " multiplies to zero";
      witness = os.str();
      break;
    }
    rep.checks.push_back(witness.empty()
                             ? audit_pass("quotient-zero-divisors", "proper two-sided ideals")
                             : audit_fail("quotient-zero-divisors", "proper two-sided ideals", witness));
  }

  {
    auto radical = [&](Mask i) { return prime_radical(s, i, Side::Two).bits; };
    std::string ext, iso, idem;
    for (const auto& i : two) {
      Mask r = radical(i.bits);
      if (ext.empty() && (i.bits & ~r) != 0)
        ext = "i=" + set_str(s, i.bits) + " radical=" + set_str(s, r);
      if (idem.empty() && radical(r) != r)
        idem = "i=" + set_str(s, i.bits) + " radical=" + set_str(s, r) +
               " radical^2=" + set_str(s, radical(r));
      for (const auto& j : two) {
        if ((i.bits & ~j.bits) != 0) continue;
        if (iso.empty() && (r & ~radical(j.bits)) != 0)
          iso = "i=" + set_str(s, i.bits) + " j=" + set_str(s, j.bits);
      }
    }
    rep.checks.push_back(ext.empty() ? audit_pass("radical-extensive", "two-sided ideals")
                                     : audit_fail("radical-extensive", "two-sided ideals", ext));
    rep.checks.push_back(iso.empty() ? audit_pass("radical-isotone", "two-sided ideal pairs")
                                     : audit_fail("radical-isotone", "two-sided ideal pairs", iso));
    rep.checks.push_back(idem.empty() ? audit_pass("radical-idempotent", "two-sided ideals")
                                      : audit_fail("radical-idempotent", "two-sided ideals", idem));
  }

  {
    // Claimed without side conditions: the two-sided Jacobson radical is
    // semiprime. Provable only when every modular maximal ideal is prime.
    if (rep.jacobson_two.empty_family) {
      rep.checks.push_back(audit_vacuous("jacobson-semiprime", "no modular maximal ideals"));
    } else {
      auto res = is_semiprime(s, {rep.jacobson_two.bits, {}});
      rep.checks.push_back(res.holds
                               ? audit_pass("jacobson-semiprime", "two-sided")
                               : audit_fail("jacobson-semiprime", "two-sided",
                                            "witness " + tuple_str(res.witness)));
    }
  }

  {
    std::vector<Mask> semis;
    for (const auto& q : two)
      if (is_semiprime(s, q).holds) semis.push_back(q.bits);
    std::string witness;
    for (std::size_t i = 0; i < semis.size() && witness.empty(); ++i)
      for (std::size_t j = i; j < semis.size() && witness.empty(); ++j)
        for (std::size_t k = j; k < semis.size() && witness.empty(); ++k) {
          Mask meet = semis[i] & semis[j] & semis[k];
          if (!is_semiprime(s, {meet, {}}).holds)
            witness = set_str(s, semis[i]) + " ^ " + set_str(s, semis[j]) + " ^ " +
                      set_str(s, semis[k]) + " = " + set_str(s, meet);
        }
    rep.checks.push_back(witness.empty()
                             ? audit_pass("semiprime-intersection", "semiprime pairs and triples")
                             : audit_fail("semiprime-intersection", "semiprime pairs and triples", witness));
  }

  return rep;
}

std::vector<AuditEntry> hereditary_primeness_audit(const GammaSemiring& s) {
  std::vector<AuditEntry> out;
  auto kernels = all_ideals(s, IdealKind::two_sided());
  for (Side side : {Side::Left, Side::Right, Side::Two}) {
    std::string witness;
    for (const auto& k : kernels) {
      if (k.bits == full_mask(s.m)) continue;
      auto q = bourne_quotient(s, k.bits);
      for (Mask p : side_primes(q.quotient, side)) {
        Mask pb = pullback_ideal(q.projection, p);
        std::string reason;
        if (pb == full_mask(s.m))
          reason = "pullback is not proper";
        else if (!is_ideal(s, pb, kind_for_side(side)))
          reason = "pullback fails the ideal kind";
        else if (!is_prime(s, {pb, {}}, side).holds)
          reason = "pullback fails primeness";
        if (!reason.empty()) {
          std::ostringstream os;
          os << "kernel=" << set_str(s, k.bits) << " quotient_prime=" << mask_to_string(p, q.quotient.m)
             << " pullback=" << set_str(s, pb) << ": " << reason;
          witness = os.str();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(witness.empty() ? audit_pass("hereditary-primeness", side_name(side))
                                  : audit_fail("hereditary-primeness", side_name(side), witness));
  }
  return out;
}

}  // namespace gsr
