#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsr/core.hpp"

namespace gsr {

// Search space description. Free cells are the mu cells whose arguments are
// all nonzero; everything else is absorption-prefilled to 0. A shard fixes
// the first shard_depth free cells (lexicographic cell order: gamma tuple
// major, argument tuple minor) to shard_prefix.
struct SearchSpec {
  int m = 2;
  int n = 3;
  int r = 1;
  AssocMode assoc_mode = AssocMode::PaperEnds;
  bool scan_all_additions = false;
  AdditionTable add;  // consulted only when scan_all_additions is false
  bool canonical_only = false;
  int shard_depth = 0;
  std::vector<Element> shard_prefix;
  int max_free_cells = 20;
};

// total_candidates_scanned counts completions covered by the search:
// m^(free cells - shard depth) per addition table, independent of pruning,
// so shard counters sum exactly to the sequential run's counter.
struct EnumerationResult {
  SearchSpec spec;
  std::uint64_t total_candidates_scanned = 0;
  std::uint64_t valid_count = 0;
  std::uint64_t canonical_class_count = 0;
  std::vector<GammaSemiring> structures;
  std::vector<std::string> class_digests;  // sorted digests of the classes seen
};

// Depth-first search over free cells in lexicographic order, checking every
// axiom instance whose referenced cells are already determined; a failed
// instance prunes the subtree. Emitted structures additionally pass a full
// validate. canonical_only keeps only structures equal to their canonical
// form; valid_count still counts every valid structure.
EnumerationResult enumerate(const SearchSpec& spec);

// Commutative monoid additions with identity 0, deduplicated up to
// relabeling of the nonzero elements, in ascending table order. m <= 4.
std::vector<AdditionTable> enumerate_additive(int m);

// All m^depth shards of the search in prefix-lexicographic order. The input
// must use a fixed addition and must not already be sharded.
std::vector<SearchSpec> shard(const SearchSpec& spec, int depth);

// Validates that the results form a complete, disjoint shard family of one
// base search, then concatenates streams in prefix order and sums counters.
// The merged output is byte-identical to the unsharded run.
EnumerationResult merge(const std::vector<EnumerationResult>& results);

}  // namespace gsr
