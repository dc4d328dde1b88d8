#ifndef GSR_AUDIT_HPP_
#define GSR_AUDIT_HPP_

#include <string>
#include <vector>

#include "gsr/core.hpp"

namespace gsr {

enum class AuditStatus { Pass, Fail, Vacuous, WithinBound };

std::string to_string(AuditStatus s);

// One audited claim. Failures always carry a witness; findings are data,
// never fatal.
struct AuditEntry {
  std::string id;
  std::string context;
  AuditStatus status = AuditStatus::Pass;
  std::string witness;
};

AuditEntry audit_pass(std::string id, std::string context);
AuditEntry audit_fail(std::string id, std::string context, std::string witness);
AuditEntry audit_vacuous(std::string id, std::string context);

inline bool all_pass(const std::vector<AuditEntry>& entries) {
  for (const auto& e : entries)
    if (e.status == AuditStatus::Fail) return false;
  return true;
}

// Aggregated per-structure audit suite: ideal lattice closure, threshold
// laws, radical theorems, hereditary primeness, Zariski axioms for all
// sides, spectral identification, discreteness, and reduction modulo the
// Jacobson radical. Used by `analyze` and the sweep tests.
std::vector<AuditEntry> full_structure_audit(const GammaSemiring& s);

}  // namespace gsr

#endif  // GSR_AUDIT_HPP_
