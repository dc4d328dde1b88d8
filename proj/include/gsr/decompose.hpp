#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsr/audit.hpp"
#include "gsr/core.hpp"
#include "gsr/ideals.hpp"

namespace gsr {

// Both arguments must be two-sided ideals. True when their sum is the whole
// carrier.
bool are_comaximal(const GammaSemiring& s, Mask i, Mask j);

// Componentwise product of the Bourne quotients and the class-tuple map.
// Every boolean is recomputed here, never assumed; a failed stage leaves a
// witness. The product element (0,...,0) is index 0; factor order follows the
// input family, first factor most significant.
struct CrtReport {
  std::vector<Mask> ideals;
  bool pairwise_comaximal = false;
  bool map_is_homomorphism = false;
  bool surjective = false;
  bool kernel_equals_intersection = false;
  std::vector<std::string> witnesses;
  std::vector<QuotientStructure> factors;
  GammaSemiring product;
  std::vector<Element> phi;  // source element -> product element

  bool all_pass() const {
    return pairwise_comaximal && map_is_homomorphism && surjective && kernel_equals_intersection;
  }
};

// Non-ideal or non-comaximal input short-circuits with
// pairwise_comaximal=false. Product carriers above 200 elements raise
// CapacityError.
CrtReport crt_check(const GammaSemiring& s, const std::vector<Mask>& ideals);

// When the two-sided Jacobson radical is zero: runs crt_check over the
// minimal primitive ideals within the module carrier bound and checks the
// product map separates points. Vacuous when the radical is nonzero or no
// primitive ideal exists within bound.
AuditEntry wedderburn_check(const GammaSemiring& s, int j, int k_max);

// Elements whose every diagonal returns them and whose presence in a cell
// allows swapping with any adjacent argument without changing the value.
// 0 qualifies only on the one-element carrier.
std::vector<Element> central_idempotents(const GammaSemiring& s);

struct PinningSpec {
  Element e = 0;
  // Ternary gamma pair assigned to each source gamma rank; empty selects the
  // default (first digit, last digit). Must cover all r*r pairs.
  std::vector<std::pair<int, int>> gamma_map;
};

// Arity reduction for n > 3: ternary cell (x, (a,b), y, z) evaluates the
// source mu at arguments (x, e, ..., e, y, z) under the lex-least gamma
// tuple mapping to (a,b). Audits cover preimage consistency, ternary
// associativity of the result, threshold-ideal transfer, and the transfer of
// diagonal and Jacobson radicals. Findings are logged, not thrown.
struct PinnedResult {
  GammaSemiring ternary;
  std::vector<AuditEntry> audits;
};

PinnedResult pinned_ternary(const GammaSemiring& s, const PinningSpec& spec);

// After a passing crt_check: the spectrum of s must be the disjoint union of
// the factor spectra pulled back along the projections, with the vanishing
// sets matching factorwise.
AuditEntry spectra_disjoint_union_check(const GammaSemiring& s, const std::vector<Mask>& ideals);

}  // namespace gsr
