#ifndef GSR_CORE_HPP_
#define GSR_CORE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsr {

// Carrier elements are table indices; index 0 is always the additive identity.
using Element = std::uint8_t;

// Subset of a carrier with m <= 16: bit i set means element i is a member.
using Mask = std::uint32_t;

inline Mask full_mask(int m) { return (m >= 32) ? ~Mask{0} : ((Mask{1} << m) - 1); }
inline bool mask_has(Mask s, int i) { return (s >> i) & 1u; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which nestings of two mu applications must agree:
// PaperEnds compares only the two end windows of a (2n-1)-argument sequence;
// DornteAllWindows compares every window position.
enum class AssocMode { PaperEnds, DornteAllWindows };

enum class Side { Left, Right, Two };

std::string to_string(Side s);

struct AdditionTable {
  int m = 0;
  std::vector<Element> cells;  // m*m, row-major

  Element at(int i, int j) const { return cells[static_cast<std::size_t>(i) * m + j]; }
  bool operator==(const AdditionTable&) const = default;
};

enum class Axiom { A1, A2, A3, A4 };

std::string to_string(Axiom a);

// slot meaning per axiom:
//   A1: 0 = commutativity, 1 = associativity, 2 = identity
//   A2: distributed argument slot, 1-based
//   A3: slot holding the zero argument, 1-based
//   A4: window index whose value differs from window 1
struct Violation {
  Axiom axiom;
  int slot = 0;
  std::vector<int> witness;
  Element lhs = 0;
  Element rhs = 0;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;  // capped per axiom, lexicographic witness order
};

// Finite n-ary Gamma-semiring given by tables. mu holds one flat table of
// m^n cells per Gamma-tuple; Gamma-tuples of length n-1 are ranked
// lexicographically with the first coordinate most significant, and mu cells
// are ranked with argument x1 most significant.
struct GammaSemiring {
  int m = 0;
  int n = 0;
  int r = 0;
  AssocMode assoc_mode = AssocMode::PaperEnds;
  AdditionTable add;
  std::vector<std::vector<Element>> mu;

  std::size_t gamma_tuple_count() const;
  std::size_t mu_table_size() const;

  Element add_at(int i, int j) const { return add.at(i, j); }
  Element mu_at(std::size_t gamma_rank, std::size_t cell) const { return mu[gamma_rank][cell]; }

  bool operator==(const GammaSemiring&) const = default;
};

std::size_t ipow(std::size_t base, unsigned exp);

// Throws CapacityError when table sizes would not fit the shape limits.
void check_shape(const GammaSemiring& s);

std::size_t mu_cell_index(const GammaSemiring& s, const std::vector<int>& args);
std::size_t gamma_rank(const GammaSemiring& s, const std::vector<int>& gammas);

std::vector<int> decode_gamma(const GammaSemiring& s, std::size_t rank);
std::vector<int> decode_args(const GammaSemiring& s, std::size_t cell);

// Bounds-checked evaluation; UsageError on out-of-range arguments or a
// gamma tuple of the wrong length.
Element eval_mu(const GammaSemiring& s, const std::vector<int>& gammas,
                const std::vector<int>& args);

// Nested evaluation of the flattened sequence xs (2n-1 arguments) with
// gamma digits gs (2n-2), inner window at 1-based position w. The window
// consumes gammas g_w..g_{w+n-2}; the outer application gets the rest in
// positional order.
Element window_value(const GammaSemiring& s, const std::vector<int>& xs,
                     const std::vector<int>& gs, int w);

ValidationReport validate(const GammaSemiring& s, int max_violations_per_axiom = 16);

// Argument transpositions (i, j), 1-based, i < j, under which some mu cell
// changes value. Empty profile means mu is fully symmetric.
std::vector<std::pair<int, int>> symmetry_profile(const GammaSemiring& s);

struct Homomorphism {
  GammaSemiring source;
  GammaSemiring target;
  std::vector<Element> map;  // size source.m, map[0] == 0 required
};

// UsageError when arities or Gamma sizes differ; otherwise checks map(0)=0,
// additivity, and every mu cell.
bool is_homomorphism(const Homomorphism& f);

Mask pullback_ideal(const Homomorphism& f, Mask target_subset);

struct QuotientStructure {
  GammaSemiring parent;
  Mask ideal_bits = 0;
  std::vector<int> class_of;               // element -> block index
  std::vector<std::vector<int>> classes;   // blocks sorted by least element; block 0 contains 0
  GammaSemiring quotient;
  Homomorphism projection;
};

// Smallest congruence containing {(a,b) : a+p = b+q for some p,q in the
// ideal}, closed under addition and every mu slot; the quotient tables are
// induced on the blocks.
QuotientStructure bourne_quotient(const GammaSemiring& s, Mask ideal);

// perm[i] = new index of element i; perm[0] must be 0.
GammaSemiring relabel(const GammaSemiring& s, const std::vector<int>& perm);

std::string mask_to_string(Mask bits, int m);

}  // namespace gsr

#endif  // GSR_CORE_HPP_
