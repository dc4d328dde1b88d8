#include "gsr/audit.hpp"

#include <sstream>
#include <utility>

#include "gsr/decompose.hpp"
#include "gsr/ideals.hpp"
#include "gsr/modules.hpp"
#include "gsr/primes.hpp"
#include "gsr/spectra.hpp"

namespace gsr {

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Pass: return "pass";
    case AuditStatus::Fail: return "fail";
    case AuditStatus::Vacuous: return "vacuous";
    case AuditStatus::WithinBound: return "within_bound";
  }
  return "unknown";
}

AuditEntry audit_pass(std::string id, std::string context) {
  return AuditEntry{std::move(id), std::move(context), AuditStatus::Pass, {}};
}

AuditEntry audit_fail(std::string id, std::string context, std::string witness) {
  return AuditEntry{std::move(id), std::move(context), AuditStatus::Fail, std::move(witness)};
}

AuditEntry audit_vacuous(std::string id, std::string context) {
  return AuditEntry{std::move(id), std::move(context), AuditStatus::Vacuous, {}};
}

namespace {

void append(std::vector<AuditEntry>& out, std::vector<AuditEntry> more) {
  for (auto& e : more) out.push_back(std::move(e));
}

AuditEntry crt_entry(const std::string& id, const std::string& context, const CrtReport& rep) {
  if (rep.all_pass()) return audit_pass(id, context);
  std::string witness = rep.witnesses.empty() ? "stage flags failed" : rep.witnesses.front();
  return audit_fail(id, context, witness);
}

void comaximal_pair_audits(const GammaSemiring& s, std::vector<AuditEntry>& out) {
  const Mask full = full_mask(s.m);
  std::vector<IdealSubset> two = all_ideals(s, IdealKind::two_sided());
  for (std::size_t i = 0; i < two.size(); ++i) {
    for (std::size_t j = i + 1; j < two.size(); ++j) {
      const Mask a = two[i].bits;
      const Mask b = two[j].bits;
      if (a == full || b == full) continue;
      if (!are_comaximal(s, a, b)) continue;
      std::ostringstream ctx;
      ctx << "ideals " << mask_to_string(a, s.m) << ", " << mask_to_string(b, s.m);
      try {
        const CrtReport rep = crt_check(s, {a, b});
        out.push_back(crt_entry("crt-pair", ctx.str(), rep));
        out.push_back(spectra_disjoint_union_check(s, {a, b}));
      } catch (const CapacityError& e) {
        AuditEntry entry = audit_vacuous("crt-pair", ctx.str());
        entry.witness = e.what();
        out.push_back(std::move(entry));
      }
    }
  }
}

void reduction_mod_radical(const GammaSemiring& s, std::vector<AuditEntry>& out) {
  const RadicalResult jac = jacobson_radical(s, Side::Two);
  if (jac.empty_family) {
    out.push_back(audit_vacuous("reduction-mod-radical",
                                "no modular maximal two-sided ideals"));
    return;
  }
  const std::string ctx = "radical " + mask_to_string(jac.bits, s.m);
  const QuotientStructure q = bourne_quotient(s, jac.bits);
  const RadicalResult reduced = jacobson_radical(q.quotient, Side::Two);
  if (reduced.empty_family) {
    out.push_back(audit_fail("reduction-mod-radical", ctx,
                             "quotient has no modular maximal two-sided ideals"));
    return;
  }
  if (reduced.bits == Mask{1}) {
    out.push_back(audit_pass("reduction-mod-radical", ctx));
  } else {
    out.push_back(audit_fail("reduction-mod-radical", ctx,
                             "quotient radical " +
                                 mask_to_string(reduced.bits, q.quotient.m)));
  }
}

}  // namespace

std::vector<AuditEntry> full_structure_audit(const GammaSemiring& s) {
  std::vector<AuditEntry> out = ideal_lattice_audit(s);

  RadicalReport rad = audit_radical_theorems(s);
  append(out, std::move(rad.checks));
  append(out, hereditary_primeness_audit(s));

  for (Side side : {Side::Left, Side::Right, Side::Two})
    append(out, verify_zariski_axioms(s, side));
  out.push_back(discreteness_check(s).biconditional);

  append(out, audit_representation_theorems(s, 2, 2));
  out.push_back(wedderburn_check(s, 2, 2));

  out.push_back(crt_entry("crt-zero-ideal", "family limited to the zero ideal",
                          crt_check(s, {Mask{1}})));
  comaximal_pair_audits(s, out);
  reduction_mod_radical(s, out);
  return out;
}

}  // namespace gsr
