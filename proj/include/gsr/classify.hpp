#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsr/core.hpp"

namespace gsr {

// Lexicographically least relabeling of the tables over all permutations of
// the nonzero elements (and of the gamma alphabet when enabled). The digest
// is the SHA-256 hex of the canonical serialization.
struct CanonicalForm {
  GammaSemiring structure;
  std::string digest;
  std::vector<int> relabeling;  // relabeling[i] = image of element i, 0 fixed
  std::vector<int> gamma_perm;  // identity unless the gamma scan was enabled
  bool gamma_permuted = false;
};

// m <= 8 (factorial scan); the gamma scan additionally requires r <= 6.
CanonicalForm canonical_form(const GammaSemiring& s, bool permute_gamma = false);

std::string digest(const GammaSemiring& s, bool permute_gamma = false);

// Witness soundness is verified before returning; a shape mismatch yields
// absent with a note instead of an error. With the gamma scan enabled the
// witness may realign gamma tuples; gamma_perm records how.
struct IsoResult {
  bool isomorphic = false;
  std::optional<Homomorphism> witness;
  std::vector<int> gamma_perm;
  std::string note;
};

IsoResult are_isomorphic(const GammaSemiring& a, const GammaSemiring& b,
                         bool permute_gamma = false);

// Digest grouping with per-member witness verification. A verification miss
// means a hash collision: the class is split by exhaustive search and the
// entry flagged.
struct IsoClass {
  std::string digest;
  std::vector<std::size_t> members;  // indices into the input batch
  bool collision_flagged = false;
  std::string note;
};

std::vector<IsoClass> partition(const std::vector<GammaSemiring>& batch,
                                bool permute_gamma = false);

}  // namespace gsr
