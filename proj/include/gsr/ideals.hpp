#ifndef GSR_IDEALS_HPP_
#define GSR_IDEALS_HPP_

#include <compare>
#include <optional>
#include <vector>

#include "gsr/audit.hpp"
#include "gsr/core.hpp"

namespace gsr {

// Subsets must contain 0 and be additively closed to carry any kind.
// Positional(S): whenever every slot in S holds a member, the product is a
// member. Left = Positional({2}), Right = Positional({n}); TwoSided requires
// both. Threshold(t): whenever at least t slots hold members.
struct IdealKind {
  enum class Tag { Left, Right, TwoSided, Positional, Threshold };
  Tag tag = Tag::TwoSided;
  Mask slots = 0;  // Positional: bit i-1 set means slot i constrained
  int level = 0;   // Threshold: 1..n

  static IdealKind left() { return {Tag::Left, 0, 0}; }
  static IdealKind right() { return {Tag::Right, 0, 0}; }
  static IdealKind two_sided() { return {Tag::TwoSided, 0, 0}; }
  static IdealKind positional(Mask s) { return {Tag::Positional, s, 0}; }
  static IdealKind threshold(int t) { return {Tag::Threshold, 0, t}; }

  auto operator<=>(const IdealKind&) const = default;
  std::string to_string() const;
};

struct IdealSubset {
  Mask bits = 0;
  std::vector<IdealKind> kinds;  // verified kinds, sorted, unique

  bool has_kind(const IdealKind& k) const;
  void tag_kind(const IdealKind& k);
  bool operator==(const IdealSubset&) const = default;
};

bool additively_closed_with_zero(const GammaSemiring& s, Mask subset);
Mask additive_closure(const GammaSemiring& s, Mask subset);

bool is_ideal(const GammaSemiring& s, Mask subset, const IdealKind& kind);

// Every subset of the given kind, ordered by ascending bit pattern.
// UsageError when the carrier exceeds the scan limit.
std::vector<IdealSubset> all_ideals(const GammaSemiring& s, const IdealKind& kind,
                                    int carrier_limit = 16);

// Least superset of the seed closed under addition, 0, and the kind's
// absorption rule. UsageError on an empty seed.
IdealSubset generated_ideal(const GammaSemiring& s, Mask seed, const IdealKind& kind);

// Elementwise sums {x+y}; operands must share a verified kind (UsageError
// otherwise). The result is tagged with every common kind it still passes;
// a dropped kind is a lattice-audit counterexample, not an error here.
IdealSubset sum_ideals(const GammaSemiring& s, const IdealSubset& a, const IdealSubset& b);

// Bitwise intersection of a nonempty family sharing a verified kind.
IdealSubset intersect_ideals(const GammaSemiring& s, const std::vector<IdealSubset>& family);

struct ThresholdIndex {
  std::optional<int> value;       // least passing threshold; nullopt = infinity
  bool additively_closed = true;  // false explains an infinite tau

  bool operator==(const ThresholdIndex&) const = default;
};

ThresholdIndex tau(const GammaSemiring& s, Mask subset);

struct PositionalDecomposition {
  bool equal = false;
  Mask intersection = 0;
  std::vector<std::pair<Mask, Mask>> family;  // (slot set S, least Positional(S) extension)
};

// Compares an ideal passing Threshold(t) with the intersection of its least
// Positional(S) extensions over all |S| = t.
PositionalDecomposition positional_decomposition_check(const GammaSemiring& s, Mask ideal, int t);

// Sum/intersection closure for every kind at this arity, plus the threshold
// hierarchy and monotonicity claims.
std::vector<AuditEntry> ideal_lattice_audit(const GammaSemiring& s);

}  // namespace gsr

#endif  // GSR_IDEALS_HPP_
