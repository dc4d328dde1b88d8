// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gsr/audit.hpp"
#include "gsr/classify.hpp"
#include "gsr/core.hpp"
#include "gsr/decompose.hpp"
#include "gsr/enumerate.hpp"
#include "gsr/io.hpp"
#include "gsr/modules.hpp"
#include "gsr/primes.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace gsr;

namespace {

struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& msg) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

bool entries_equal(const std::vector<AuditEntry>& a, const std::vector<AuditEntry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].id != b[i].id || a[i].context != b[i].context || a[i].status != b[i].status ||
        a[i].witness != b[i].witness)
      return false;
  return true;
}

const std::set<std::string>& always_provable_ids() {
  static const std::set<std::string> ids{
      "ideal-sum-closure",        "ideal-intersection-closure",
      "threshold-hierarchy",      "hereditary-primeness",
      "semiprime-intersection",   "semiprime-fixed-point",
      "radical-extensive",        "radical-isotone",
      "radical-idempotent",       "zariski-empty-full",
      "zariski-pair-intersection", "zariski-radical-invariance",
      "zariski-t0"};
  return ids;
}

SearchSpec ternary_spec(int m, const AdditionTable& add) {
  SearchSpec spec;
  spec.m = m;
  spec.n = 3;
  spec.r = 1;
  spec.add = add;
  return spec;
}

std::map<std::string, std::string> dir_tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    out[fs::relative(entry.path(), root).string()] = os.str();
  }
  return out;
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("gsr_acceptance_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int g_failures = 0;

void criterion(int idx, const std::string& label,
               const std::function<void(Checker&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << label
            << " (" << ms << " ms)";
  if (!c.ok) std::cout << " -- " << c.detail;
  std::cout << "\n";
  if (!c.ok) ++g_failures;
}

long long run_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  criterion(1, "exhaustive ternary searches match the brute-force scans", [](Checker& c) {
    EnumerationResult small;
    const long long ms2 = run_ms([&] { small = enumerate(ternary_spec(2, fixtures::or_add())); });
    const auto ref2 = oracle::scan_ternary_r1(2, fixtures::or_add(), false);
    c.expect(ref2.scanned == 256, "reference scan must cover all 256 tables");
    c.expect(small.valid_count == ref2.valid, "m=2 valid count mismatch");
    c.expect(small.canonical_class_count == ref2.classes, "m=2 class count mismatch");
    c.expect(small.valid_count == 2, "m=2 valid count is not 2");
    for (const auto& s : small.structures)
      c.expect(oracle::valid_structure(s), "m=2 emitted structure fails the reference check");
    c.expect(ms2 < 1000, "m=2 search exceeded 1s");

    EnumerationResult big;
    const long long ms3 = run_ms([&] { big = enumerate(ternary_spec(3, fixtures::max_add())); });
    const auto ref3 = oracle::scan_ternary_r1(3, fixtures::max_add(), true);
    c.expect(ref3.scanned == 6561, "reference scan must cover all 6561 completions");
    c.expect(big.valid_count == ref3.valid, "m=3 valid count mismatch");
    c.expect(big.canonical_class_count == ref3.classes, "m=3 class count mismatch");
    for (const auto& s : big.structures)
      c.expect(oracle::valid_structure(s), "m=3 emitted structure fails the reference check");
    c.expect(ms3 < 10000, "m=3 search exceeded 10s");
  });

  criterion(2, "the saturating peak is rejected with the pinned counterexample", [](Checker& c) {
    const auto rep = validate(fixtures::peak3());
    c.expect(!rep.valid, "structure must be invalid");
    const Violation* first = nullptr;
    for (const auto& v : rep.violations)
      if (v.axiom == Axiom::A2) {
        first = &v;
        break;
      }
    c.expect(first != nullptr, "no additivity violation reported");
    if (first) {
      c.expect(first->slot == 1, "wrong slot");
      c.expect(first->witness == std::vector<int>{1, 1, 1, 1, 0, 0}, "wrong witness");
      c.expect(first->lhs == 1 && first->rhs == 2, "wrong values");
    }
  });

  criterion(3, "audit sweep over every ternary structure with carrier at most 3",
            [](Checker& c) {
    const long long ms = run_ms([&] {
      for (int m = 1; m <= 3 && c.ok; ++m) {
        for (const auto& add : enumerate_additive(m)) {
          const auto res = enumerate(ternary_spec(m, add));
          for (const auto& s : res.structures) {
            const auto first = full_structure_audit(s);
            const auto second = full_structure_audit(s);
            if (!entries_equal(first, second)) {
              c.expect(false, "audit is not deterministic");
              return;
            }
            for (const auto& e : first) {
              if (e.status != AuditStatus::Fail) continue;
              if (e.witness.empty()) {
                c.expect(false, "failed entry " + e.id + " has no witness");
                return;
              }
              if (always_provable_ids().count(e.id)) {
                c.expect(false, "provable claim " + e.id + " failed on m=" +
                                    std::to_string(m) + " (" + e.witness + ")");
                return;
              }
              if (e.id == "zariski-finite-union" && e.context != "right") {
                c.expect(false, "finite-union failed on side " + e.context);
                return;
              }
            }
          }
        }
      }
    });
    c.expect(ms < 300000, "sweep exceeded 5 minutes");
  });

  criterion(4, "showcase audits are deterministic and witnessed", [](Checker& c) {
    for (const auto& s : {fixtures::bool_and(), fixtures::max_proj()}) {
      const auto first = full_structure_audit(s);
      const auto second = full_structure_audit(s);
      c.expect(entries_equal(first, second), "audit is not deterministic");
      bool saw_crt = false, saw_jvp = false;
      for (const auto& e : first) {
        if (e.status == AuditStatus::Fail)
          c.expect(!e.witness.empty(), "failed entry " + e.id + " has no witness");
        if (e.id == "crt-zero-ideal") {
          saw_crt = true;
          c.expect(e.status == AuditStatus::Pass, "crt-zero-ideal did not pass");
        }
        if (e.id == "jacobson-vs-primitives") {
          saw_jvp = true;
          c.expect(e.status == AuditStatus::Pass, "jacobson-vs-primitives did not pass");
        }
      }
      c.expect(saw_crt, "crt-zero-ideal entry missing");
      c.expect(saw_jvp, "jacobson-vs-primitives entry missing");
    }
  });

  criterion(5, "bounded module search grounds the primitive-ideal picture", [](Checker& c) {
    const long long ms = run_ms([&] {
      for (const auto& s : {fixtures::bool_and(), fixtures::max_proj()}) {
        const auto mods = enumerate_modules(s, 2, 2);
        c.expect(mods.size() == oracle::count_modules(s, 2, 2),
                 "module count disagrees with the reference scan");
        for (const auto& mod : mods)
          c.expect(oracle::valid_module(mod), "enumerated module fails the reference check");

        const auto prims = primitive_ideals(s, 2, 2);
        c.expect(!prims.ideals.empty(), "no primitive ideal found");
        Mask inter = full_mask(s.m);
        for (const auto& entry : prims.ideals) {
          IdealSubset p;
          p.bits = entry.ideal;
          c.expect(is_prime(s, p, Side::Two).holds, "primitive ideal is not prime");
          inter &= entry.ideal;
        }
        const auto jac = jacobson_radical(s, Side::Two);
        c.expect(!jac.empty_family && jac.bits == inter,
                 "radical does not match the primitive intersection");
        if (s.m == 3)
          c.expect(!prims.excluded.empty(), "degenerate annihilators were not reported");
      }
    });
    c.expect(ms < 60000, "module checks exceeded 1 minute");
  });

  criterion(6, "pinning the arity-4 structure reproduces the ternary one", [](Checker& c) {
    PinningSpec spec;
    spec.e = 1;
    const auto res = pinned_ternary(fixtures::pin4(), spec);
    c.expect(res.ternary == fixtures::bool_and(), "pinned tables differ");
    for (const auto& e : res.audits)
      c.expect(e.status == AuditStatus::Pass, "pinning audit " + e.id + " did not pass");
  });

  criterion(7, "digests are relabeling-invariant and separate exactly the classes",
            [](Checker& c) {
    const auto res = enumerate(ternary_spec(3, fixtures::max_add()));
    std::mt19937 rng(0xC0FFEE);
    std::vector<std::string> digests;
    for (const auto& s : res.structures) digests.push_back(digest(s));
    for (std::size_t i = 0; i < res.structures.size() && c.ok; ++i) {
      std::vector<int> perm{0, 1, 2};
      for (int round = 0; round < 1000; ++round) {
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        if (digest(relabel(res.structures[i], perm)) != digests[i]) {
          c.expect(false, "digest changed under relabeling");
          break;
        }
      }
    }
    for (std::size_t i = 0; i < res.structures.size() && c.ok; ++i)
      for (std::size_t j = i + 1; j < res.structures.size() && c.ok; ++j) {
        const bool same = digests[i] == digests[j];
        const bool iso = oracle::isomorphic(res.structures[i], res.structures[j]);
        if (same != iso)
          c.expect(false, "digest equality disagrees with the bijection scan at pair " +
                              std::to_string(i) + "," + std::to_string(j));
      }
  });

  criterion(8, "sharded searches merge into the sequential result byte for byte",
            [](Checker& c) {
    const SearchSpec base = ternary_spec(3, fixtures::max_add());
    const auto whole = enumerate(base);
    std::vector<EnumerationResult> parts;
    for (const auto& sh : shard(base, 1)) parts.push_back(enumerate(sh));
    const auto merged = merge(parts);
    c.expect(merged.total_candidates_scanned == whole.total_candidates_scanned,
             "scan counters differ");
    c.expect(merged.valid_count == whole.valid_count, "valid counters differ");
    c.expect(merged.canonical_class_count == whole.canonical_class_count,
             "class counters differ");
    c.expect(merged.structures == whole.structures, "structure streams differ");
    c.expect(merged.class_digests == whole.class_digests, "class digest sets differ");

    const auto dir_a = fresh_dir("sequential");
    const auto dir_b = fresh_dir("merged");
    {
      ResultsStore sa(dir_a.string());
      for (const auto& s : whole.structures) sa.put_structure(s);
      sa.rebuild_index();
      ResultsStore sb(dir_b.string());
      for (const auto& s : merged.structures) sb.put_structure(s);
      sb.rebuild_index();
    }
    c.expect(dir_tree(dir_a) == dir_tree(dir_b), "store trees differ");
  });

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
