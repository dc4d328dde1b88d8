#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gsr/audit.hpp"
#include "gsr/core.hpp"
#include "gsr/ideals.hpp"
#include "gsr/primes.hpp"

namespace gsr {

// All proper side-primes, ascending bit patterns, duplicate free.
struct Spectrum {
  Side side = Side::Two;
  std::vector<IdealSubset> points;
};

Spectrum spectrum(const GammaSemiring& s, Side side);

// Indices into spec.points of the primes containing the generator.
struct ClosedSet {
  Mask generator = 0;
  std::vector<std::size_t> points;
};

ClosedSet vanishing_set(const Spectrum& spec, Mask a_set);
std::vector<std::size_t> basic_open(const Spectrum& spec, Element a);

// Closure axioms for the vanishing sets:
//   zariski-empty-full        V({0}) is everything, V(T) is empty
//   zariski-pair-intersection V(A) ^ V(B) = V(A u B) over all subset pairs
//   zariski-finite-union      V(I) u V(J) = V(I ^ J) over side-ideal pairs
//   zariski-radical-invariance V(I) = V(prime_radical(I))
//   zariski-t0                distinct points separated by a basic open set
// The union identity can genuinely fail on the right side; findings are
// entries, never throws. Finite spaces are compact by construction.
std::vector<AuditEntry> verify_zariski_axioms(const GammaSemiring& s, Side side);

// Spec(target) -> Spec(source) along a surjective homomorphism, plus audits
// that every pullback lands in the source spectrum and that preimages of
// vanishing sets are vanishing sets of the pushed generators.
struct PullbackResult {
  std::vector<std::pair<Mask, Mask>> map;  // (target prime, source pullback)
  std::vector<AuditEntry> audits;
};

PullbackResult pullback_map(const Homomorphism& f, Side side);

// order holds every containment pair (i,j) with points[i] subseteq points[j];
// components are the closures of the minimal points.
struct SpecializationReport {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::size_t> minimal_points;
  std::vector<std::vector<std::size_t>> components;
};

SpecializationReport specialization_and_components(const Spectrum& spec);

// Ties a trivial two-sided Jacobson radical to discreteness of Spec_2.
struct DiscretenessReport {
  bool jacobson_zero = false;
  bool jacobson_empty_family = false;
  bool discrete_topology = false;
  std::vector<Mask> isolated;  // bit patterns of isolated points
  AuditEntry biconditional;
};

DiscretenessReport discreteness_check(const GammaSemiring& s);

}  // namespace gsr
