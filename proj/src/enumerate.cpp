#include "gsr/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "gsr/classify.hpp"

namespace gsr {

namespace {

bool next_digits(std::vector<int>& t, int base, int lo = 0) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < base) return true;
    t[i] = lo;
  }
  return false;
}

bool addition_is_monoid(const AdditionTable& a) {
  const int m = a.m;
  if (m < 1 || a.cells.size() != static_cast<std::size_t>(m) * m) return false;
  for (int i = 0; i < m; ++i) {
    if (a.at(0, i) != i || a.at(i, 0) != i) return false;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (a.at(i, j) != a.at(j, i)) return false;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (a.at(a.at(i, j), k) != a.at(i, a.at(j, k))) return false;
      }
    }
  }
  return true;
}

std::vector<Element> relabel_addition(const AdditionTable& a, const std::vector<int>& perm) {
  const int m = a.m;
  std::vector<Element> out(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out[static_cast<std::size_t>(perm[i]) * m + perm[j]] =
          static_cast<Element>(perm[a.at(i, j)]);
    }
  }
  return out;
}

// Scaffolding shared by enumerate and shard: the zero-prefilled structure,
// the free-cell list in lexicographic order, and the reverse lookup.
struct SearchFrame {
  GammaSemiring s;
  std::vector<std::pair<std::size_t, std::size_t>> free_cells;  // (gamma, cell)
  std::vector<std::vector<int>> free_index;                     // -1 = prefilled
  int free_count = 0;
};

SearchFrame prepare(const SearchSpec& spec) {
  if (spec.m < 1) throw UsageError("carrier size must be at least 1");
  if (spec.n < 3) throw UsageError("arity must be at least 3");
  if (spec.r < 1) throw UsageError("gamma alphabet must be nonempty");
  if (spec.scan_all_additions && spec.shard_depth > 0)
    throw UsageError("sharding requires a fixed addition table");
  if (!spec.scan_all_additions) {
    if (spec.add.m != spec.m ||
        spec.add.cells.size() != static_cast<std::size_t>(spec.m) * spec.m)
      throw UsageError("addition table does not match the requested carrier size");
  }

  SearchFrame f;
  f.s.m = spec.m;
  f.s.n = spec.n;
  f.s.r = spec.r;
  f.s.assoc_mode = spec.assoc_mode;
  f.s.add.m = spec.m;
  f.s.add.cells.assign(static_cast<std::size_t>(spec.m) * spec.m, 0);

  if (spec.m > 16) throw CapacityError("carrier limit is 16 elements");
  if (spec.n > 8 || spec.r > 16) throw CapacityError("arity limit is 8, gamma limit is 16");

  // Free cells are the all-nonzero argument tuples of every gamma row; the
  // rest are pinned to 0 by absorption. Reject oversized spaces before the
  // tables are allocated.
  std::uint64_t projected = 1;
  for (int i = 0; i < spec.n - 1; ++i) projected *= static_cast<std::uint64_t>(spec.r);
  for (int i = 0; i < spec.n; ++i) projected *= static_cast<std::uint64_t>(spec.m - 1);
  if (projected > static_cast<std::uint64_t>(spec.max_free_cells)) {
    std::ostringstream msg;
    msg << "search space has " << projected << " free cells, above the limit of "
        << spec.max_free_cells;
    throw CapacityError(msg.str());
  }

  const std::size_t gcount = f.s.gamma_tuple_count();
  const std::size_t csize = f.s.mu_table_size();
  f.s.mu.assign(gcount, std::vector<Element>(csize, 0));
  check_shape(f.s);
  f.free_index.assign(gcount, std::vector<int>(csize, -1));

  for (std::size_t g = 0; g < gcount; ++g) {
    for (std::size_t c = 0; c < csize; ++c) {
      std::vector<int> args = decode_args(f.s, c);
      bool all_nonzero = true;
      for (int a : args) {
        if (a == 0) {
          all_nonzero = false;
          break;
        }
      }
      if (!all_nonzero) continue;
      f.free_index[g][c] = f.free_count++;
      f.free_cells.emplace_back(g, c);
    }
  }

  if (spec.m > 1 &&
      static_cast<double>(f.free_count) * std::log2(static_cast<double>(spec.m)) > 62.0)
    throw CapacityError("candidate count does not fit a 64-bit counter");

  if (spec.shard_depth < 0 || spec.shard_depth > f.free_count)
    throw UsageError("shard depth must lie between 0 and the free cell count");
  if (spec.shard_prefix.size() != static_cast<std::size_t>(spec.shard_depth))
    throw UsageError("shard prefix length must equal the shard depth");
  for (Element v : spec.shard_prefix) {
    if (v >= spec.m) throw UsageError("shard prefix value outside the carrier");
  }
  return f;
}

struct Searcher {
  const SearchSpec& spec;
  SearchFrame& f;
  EnumerationResult& result;
  std::set<std::string>& class_digests;
  int depth;  // shard depth: free cells below this index are pinned

  // Value lookup during the scan. Free cells at index >= assigned are
  // undetermined; maxf tracks the largest free index consulted so an
  // instance is checked exactly once, at the node that completed it.
  bool cell_value(std::size_t g, std::size_t cell, int assigned, Element* v,
                  int* maxf) const {
    const int fi = f.free_index[g][cell];
    if (fi >= 0) {
      if (fi >= assigned) return false;
      if (fi > *maxf) *maxf = fi;
    }
    *v = f.s.mu[g][cell];
    return true;
  }

  bool a2_consistent(int assigned, int min_fresh) const {
    const int n = f.s.n;
    const int m = f.s.m;
    const std::size_t gcount = f.s.gamma_tuple_count();
    if (m < 2) return true;
    std::vector<int> rest(n - 1, 1);
    std::vector<int> args(n, 0);
    for (std::size_t g = 0; g < gcount; ++g) {
      for (int slot = 1; slot <= n; ++slot) {
        std::fill(rest.begin(), rest.end(), 1);
        do {
          for (int x = 1; x < m; ++x) {
            for (int xp = 1; xp < m; ++xp) {
              int k = 0;
              for (int pos = 1; pos <= n; ++pos) {
                args[pos - 1] = (pos == slot) ? 0 : rest[k++];
              }
              args[slot - 1] = x;
              const std::size_t cx = mu_cell_index(f.s, args);
              args[slot - 1] = xp;
              const std::size_t cxp = mu_cell_index(f.s, args);
              args[slot - 1] = f.s.add.at(x, xp);
              const std::size_t csum = mu_cell_index(f.s, args);

              int maxf = -1;
              Element vx, vxp, vsum;
              if (!cell_value(g, cx, assigned, &vx, &maxf)) continue;
              if (!cell_value(g, cxp, assigned, &vxp, &maxf)) continue;
              if (!cell_value(g, csum, assigned, &vsum, &maxf)) continue;
              if (maxf < min_fresh) continue;
              if (vsum != f.s.add.at(vx, vxp)) return false;
            }
          }
        } while (next_digits(rest, m, 1));
      }
    }
    return true;
  }

  std::size_t gamma_rank_of(const std::vector<int>& gs, int lo, int len) const {
    std::size_t rank = 0;
    for (int i = 0; i < len; ++i) rank = rank * f.s.r + gs[lo + i];
    return rank;
  }

  bool known_window(const std::vector<int>& xs, const std::vector<int>& gs, int w,
                    int assigned, Element* out, int* maxf) const {
    const int n = f.s.n;
    std::vector<int> inner(xs.begin() + (w - 1), xs.begin() + (w - 1 + n));
    const std::size_t ig = gamma_rank_of(gs, w - 1, n - 1);
    const std::size_t ic = mu_cell_index(f.s, inner);
    Element v;
    if (!cell_value(ig, ic, assigned, &v, maxf)) return false;

    std::vector<int> outer_args;
    outer_args.reserve(n);
    for (int i = 0; i < w - 1; ++i) outer_args.push_back(xs[i]);
    outer_args.push_back(v);
    for (int i = w - 1 + n; i < 2 * n - 1; ++i) outer_args.push_back(xs[i]);

    std::vector<int> outer_gs;
    outer_gs.reserve(n - 1);
    for (int i = 0; i < w - 1; ++i) outer_gs.push_back(gs[i]);
    for (int i = w - 1 + n - 1; i < 2 * n - 2; ++i) outer_gs.push_back(gs[i]);

    std::size_t og = 0;
    for (int d : outer_gs) og = og * f.s.r + d;
    const std::size_t oc = mu_cell_index(f.s, outer_args);
    return cell_value(og, oc, assigned, out, maxf);
  }

  bool a4_consistent(int assigned, int min_fresh) const {
    const int n = f.s.n;
    const int m = f.s.m;
    if (m < 2) return true;
    std::vector<int> windows;
    if (f.s.assoc_mode == AssocMode::PaperEnds) {
      windows.push_back(n);
    } else {
      for (int w = 2; w <= n; ++w) windows.push_back(w);
    }
    std::vector<int> gs(2 * n - 2, 0);
    do {
      std::vector<int> xs(2 * n - 1, 1);
      do {
        for (int w : windows) {
          int maxf = -1;
          Element lhs = 0, rhs = 0;
          if (!known_window(xs, gs, 1, assigned, &lhs, &maxf)) continue;
          if (!known_window(xs, gs, w, assigned, &rhs, &maxf)) continue;
          if (maxf < min_fresh) continue;
          if (lhs != rhs) return false;
        }
      } while (next_digits(xs, m, 1));
    } while (next_digits(gs, f.s.r));
    return true;
  }

  bool consistent(int assigned, int min_fresh) const {
    return a2_consistent(assigned, min_fresh) && a4_consistent(assigned, min_fresh);
  }

  void leaf() {
    if (!validate(f.s).valid) return;
    ++result.valid_count;
    CanonicalForm cf = canonical_form(f.s);
    class_digests.insert(cf.digest);
    const bool self_canonical = (cf.structure == f.s);
    if (!spec.canonical_only || self_canonical) result.structures.push_back(f.s);
  }

  void dfs(int assigned) {
    if (assigned == f.free_count) {
      leaf();
      return;
    }
    const auto [g, c] = f.free_cells[assigned];
    for (int v = 0; v < f.s.m; ++v) {
      f.s.mu[g][c] = static_cast<Element>(v);
      if (consistent(assigned + 1, assigned)) dfs(assigned + 1);
    }
  }

  void run_addition(const AdditionTable& add) {
    std::size_t completions = 1;
    for (int i = 0; i < f.free_count - depth; ++i) completions *= f.s.m;
    result.total_candidates_scanned += completions;

    if (!addition_is_monoid(add)) return;
    f.s.add = add;

    for (std::size_t g = 0; g < f.s.mu.size(); ++g)
      std::fill(f.s.mu[g].begin(), f.s.mu[g].end(), Element{0});
    for (int i = 0; i < depth; ++i) {
      const auto [g, c] = f.free_cells[i];
      f.s.mu[g][c] = spec.shard_prefix[i];
    }
    if (consistent(depth, -1)) dfs(depth);
  }
};

}  // namespace

std::vector<AdditionTable> enumerate_additive(int m) {
  if (m < 1) throw UsageError("carrier size must be at least 1");
  if (m > 4) throw CapacityError("additive enumeration is limited to carriers of size 4");

  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < m; ++i) {
    for (int j = i; j < m; ++j) cells.emplace_back(i, j);
  }

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
  }

  std::set<std::vector<Element>> canon;
  std::vector<int> v(cells.size(), 0);
  bool more = true;
  while (more) {
    AdditionTable a;
    a.m = m;
    a.cells.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
      a.cells[static_cast<std::size_t>(0) * m + i] = static_cast<Element>(i);
      a.cells[static_cast<std::size_t>(i) * m + 0] = static_cast<Element>(i);
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto [i, j] = cells[k];
      a.cells[static_cast<std::size_t>(i) * m + j] = static_cast<Element>(v[k]);
      a.cells[static_cast<std::size_t>(j) * m + i] = static_cast<Element>(v[k]);
    }
    if (addition_is_monoid(a)) {
      std::vector<Element> best = a.cells;
      for (const auto& p : perms) {
        std::vector<Element> cand = relabel_addition(a, p);
        if (cand < best) best = std::move(cand);
      }
      canon.insert(std::move(best));
    }
    more = !cells.empty() && next_digits(v, m);
    if (cells.empty()) more = false;
  }

  std::vector<AdditionTable> out;
  for (const auto& cellsv : canon) {
    AdditionTable a;
    a.m = m;
    a.cells = cellsv;
    out.push_back(std::move(a));
  }
  return out;
}

EnumerationResult enumerate(const SearchSpec& spec) {
  SearchFrame frame = prepare(spec);
  EnumerationResult result;
  result.spec = spec;

  std::set<std::string> class_digests;
  Searcher searcher{spec, frame, result, class_digests, spec.shard_depth};

  std::size_t additions_scanned = 0;
  if (spec.scan_all_additions) {
    for (const AdditionTable& add : enumerate_additive(spec.m)) {
      searcher.run_addition(add);
      ++additions_scanned;
    }
  } else {
    searcher.run_addition(spec.add);
    additions_scanned = 1;
  }

  result.canonical_class_count = class_digests.size();
  result.class_digests.assign(class_digests.begin(), class_digests.end());

  if (result.valid_count > 0) {
    const long double lhs = std::log2l(static_cast<long double>(result.valid_count));
    const long double rhs =
        std::log2l(static_cast<long double>(additions_scanned)) +
        static_cast<long double>(frame.free_count) *
            std::log2l(static_cast<long double>(std::max(spec.m, 2)));
    if (lhs > rhs + 1e-6L)
      throw std::logic_error("enumeration exceeded the admissible candidate bound");
  }
  return result;
}

std::vector<SearchSpec> shard(const SearchSpec& spec, int depth) {
  if (spec.shard_depth != 0 || !spec.shard_prefix.empty())
    throw UsageError("cannot shard a spec that already carries a shard prefix");
  if (spec.scan_all_additions)
    throw UsageError("sharding requires a fixed addition table");
  SearchFrame frame = prepare(spec);
  if (depth < 1 || depth > frame.free_count)
    throw UsageError("shard depth must lie between 1 and the free cell count");

  std::size_t count = 1;
  for (int i = 0; i < depth; ++i) count *= spec.m;

  std::vector<SearchSpec> out;
  out.reserve(count);
  std::vector<Element> prefix(depth, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rem = idx;
    for (int i = depth - 1; i >= 0; --i) {
      prefix[i] = static_cast<Element>(rem % spec.m);
      rem /= spec.m;
    }
    SearchSpec piece = spec;
    piece.shard_depth = depth;
    piece.shard_prefix = prefix;
    out.push_back(std::move(piece));
  }
  return out;
}

EnumerationResult merge(const std::vector<EnumerationResult>& results) {
  if (results.empty()) throw UsageError("merge requires at least one shard result");

  const SearchSpec& base = results.front().spec;
  const int depth = base.shard_depth;
  if (depth < 1) throw UsageError("merge requires sharded results");
  for (const EnumerationResult& r : results) {
    const SearchSpec& s = r.spec;
    if (s.m != base.m || s.n != base.n || s.r != base.r ||
        s.assoc_mode != base.assoc_mode ||
        s.scan_all_additions != base.scan_all_additions ||
        s.add.cells != base.add.cells || s.canonical_only != base.canonical_only ||
        s.max_free_cells != base.max_free_cells || s.shard_depth != depth)
      throw UsageError("merge requires shards of a single base search");
  }

  std::size_t expected = 1;
  for (int i = 0; i < depth; ++i) expected *= base.m;
  if (results.size() != expected)
    throw UsageError("merge requires the complete shard family");

  std::vector<std::size_t> order(results.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return results[a].spec.shard_prefix < results[b].spec.shard_prefix;
  });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (results[order[i]].spec.shard_prefix == results[order[i + 1]].spec.shard_prefix)
      throw UsageError("merge requires pairwise distinct shard prefixes");
  }

  EnumerationResult merged;
  merged.spec = base;
  merged.spec.shard_depth = 0;
  merged.spec.shard_prefix.clear();

  std::set<std::string> digests;
  for (std::size_t idx : order) {
    const EnumerationResult& r = results[idx];
    merged.total_candidates_scanned += r.total_candidates_scanned;
    merged.valid_count += r.valid_count;
    merged.structures.insert(merged.structures.end(), r.structures.begin(),
                             r.structures.end());
    digests.insert(r.class_digests.begin(), r.class_digests.end());
  }
  merged.canonical_class_count = digests.size();
  merged.class_digests.assign(digests.begin(), digests.end());
  return merged;
}

}  // namespace gsr
