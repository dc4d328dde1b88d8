#pragma once

#include <utility>
#include <vector>

#include "gsr/audit.hpp"
#include "gsr/core.hpp"
#include "gsr/ideals.hpp"

namespace gsr {

// Outcome of a universally quantified membership check. On failure the
// witness holds the gamma digits followed by the argument tuple of the first
// counterexample in table order (gamma rank major, argument cell minor).
struct CheckResult {
  bool holds = true;
  std::vector<int> witness;
};

IdealKind kind_for_side(Side side);

// Slots (1-based) whose membership may discharge the primeness implication.
// Two: any slot. Left: slots 2..n. Right: slots 1..n-1.
std::vector<int> prime_slots(const GammaSemiring& s, Side side);

// p must be proper and pass the ideal kind matching the side.
CheckResult is_prime(const GammaSemiring& s, const IdealSubset& p, Side side);

// q must be two-sided. Holds iff no diagonal of an outside element lands in q.
CheckResult is_semiprime(const GammaSemiring& s, const IdealSubset& q);

// All n argument slots set to a. gammas has n-1 entries.
Element diagonal(const GammaSemiring& s, Element a, const std::vector<int>& gammas);

// Elements with some diagonal inside i. Raw subset, not closed into an ideal.
Mask diagonal_radical(const GammaSemiring& s, Mask i);

// An intersection over a (possibly empty) defining family of ideals.
struct RadicalResult {
  Mask bits = 0;
  bool empty_family = false;
  std::vector<Mask> family;  // ascending bit patterns
};

// Proper ideals of the side's kind passing is_prime, ascending bit patterns.
std::vector<Mask> side_primes(const GammaSemiring& s, Side side);

// Intersection of side-primes containing i; full carrier when none does.
RadicalResult prime_radical(const GammaSemiring& s, Mask i, Side side);

// Nonzero w with a + mu(a, w, ..., w, a) = a for all a and gamma tuples,
// a filling the first and last slots and w every interior one.
std::vector<Element> modular_witnesses(const GammaSemiring& s);

// Maximal proper ideals of the side, kept only when a modular witness exists.
// The witness condition does not mention the ideal, so all or none qualify.
std::vector<IdealSubset> modular_maximal_ideals(const GammaSemiring& s, Side side);

RadicalResult jacobson_radical(const GammaSemiring& s, Side side);

struct RadicalReport {
  RadicalResult prime_left, prime_right, prime_two;  // radicals of {0}
  RadicalResult jacobson_left, jacobson_right, jacobson_two;
  std::vector<std::pair<Mask, Mask>> diagonal_radicals;  // (two-sided ideal, raw subset)
  std::vector<AuditEntry> checks;
  std::vector<AuditEntry> discrepancies() const;
};

// Exhaustive checks over the two-sided ideal lattice:
//   diagonal-vs-prime-radical, semiprime-fixed-point, quotient-zero-divisors,
//   radical-extensive / radical-isotone / radical-idempotent,
//   jacobson-semiprime, semiprime-intersection.
// Findings are recorded, never thrown.
RadicalReport audit_radical_theorems(const GammaSemiring& s);

// Pullbacks of quotient side-primes along every projection T -> T/k must be
// side-prime again. One entry per side.
std::vector<AuditEntry> hereditary_primeness_audit(const GammaSemiring& s);

}  // namespace gsr
