#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gsr/audit.hpp"
#include "gsr/core.hpp"
#include "gsr/ideals.hpp"

namespace gsr {

// Module carrier [0,k) acted on with the module element in base slot j.
// action rows follow the base gamma-tuple order; within a row the n-1 base
// arguments vary in slot order (earliest slot slowest) with the module
// element fastest.
struct ModuleStructure {
  GammaSemiring base;
  int j = 2;
  int k = 1;
  AdditionTable madd;
  std::vector<std::vector<Element>> action;

  std::size_t row_size() const;
  // base_vals lists the n-1 base slots in ascending slot order.
  std::size_t cell_index(const std::vector<int>& base_vals, int u) const;
  // args has n entries; args[j-1] is the module element.
  Element act(std::size_t gamma_rank, const std::vector<int>& args) const;
};

// Violation slots reuse the base conventions. A2: the distributed slot,
// 1-based, the module slot included. A3: the slot holding the zero. A4: the
// window index whose value disagrees with the reference window; witness is
// the module position followed by the gamma sequence and the composite
// argument sequence.
ValidationReport validate_module(const ModuleStructure& mod);

// All valid modules with carrier at most k_max over every commutative monoid
// addition, zero cells prefilled, deduplicated up to relabeling of the
// nonzero module elements. Deterministic order.
std::vector<ModuleStructure> enumerate_modules(const GammaSemiring& s, int j, int k_max);

// Subsets containing the module zero, closed under madd and the action.
std::vector<Mask> submodules(const ModuleStructure& mod);

// Exactly two submodules and a nontrivial carrier.
bool is_simple(const ModuleStructure& mod);

// two_sided kills from every base slot, left from slots before j, right from
// slots after. Kinds carried on each subset are the verified ones.
struct AnnihilatorSet {
  IdealSubset two_sided, left, right;
};

AnnihilatorSet annihilators(const ModuleStructure& mod);

// Two-sided annihilators of simple modules found within the carrier bound.
// Annihilators that are improper or fail the two-sided ideal laws cannot
// index a prime and are reported separately instead of entering the list.
struct PrimitiveIdealReport {
  struct Entry {
    Mask ideal;
    ModuleStructure witness;
  };
  std::vector<Entry> ideals;  // ascending bit patterns, one witness each
  std::vector<AuditEntry> excluded;
  int k_max = 0;
  std::string bound_note;
};

PrimitiveIdealReport primitive_ideals(const GammaSemiring& s, int j, int k_max);

// Representation-theoretic checks within the carrier bound:
//   annihilator-two-sided   every valid module's annihilator passes the laws
//   primitive-prime         every primitive ideal passes is_prime(Two)
//   jacobson-vs-primitives  radical against the bounded intersection
//   first-isomorphism       image of each surjective hom vs kernel quotient
//   density-separation      a faithful simple family separates base points
std::vector<AuditEntry> audit_representation_theorems(const GammaSemiring& s, int j, int k_max);

}  // namespace gsr
