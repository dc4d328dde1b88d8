#include "gsr/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsr/audit.hpp"
#include "gsr/classify.hpp"
#include "gsr/core.hpp"
#include "gsr/decompose.hpp"
#include "gsr/enumerate.hpp"
#include "gsr/ideals.hpp"
#include "gsr/io.hpp"
#include "gsr/modules.hpp"
#include "gsr/primes.hpp"
#include "gsr/spectra.hpp"

namespace gsr {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GlobalOpts {
  std::string assoc_mode;  // empty = keep the file's mode
  int max_violations = 16;
};

GammaSemiring load_with_mode(const std::string& path, const GlobalOpts& g) {
  GammaSemiring s = load_structure(path);
  if (g.assoc_mode == "paper_ends") s.assoc_mode = AssocMode::PaperEnds;
  if (g.assoc_mode == "dornte") s.assoc_mode = AssocMode::DornteAllWindows;
  return s;
}

std::string witness_string(const std::vector<int>& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    os << w[i];
  }
  os << "]";
  return os.str();
}

void print_violations(const ValidationReport& rep) {
  for (const Violation& v : rep.violations) {
    std::cout << "  " << to_string(v.axiom) << " slot=" << v.slot
              << " witness=" << witness_string(v.witness) << " lhs=" << int(v.lhs)
              << " rhs=" << int(v.rhs) << "\n";
  }
}

ordered_json subset_json(Mask bits, int m) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < m; ++i) {
    if (mask_has(bits, i)) arr.push_back(i);
  }
  return arr;
}

ordered_json checks_json(const std::vector<AuditEntry>& checks) {
  ordered_json arr = ordered_json::array();
  for (const AuditEntry& e : checks) {
    ordered_json row;
    row["id"] = e.id;
    row["context"] = e.context;
    row["status"] = status_string(e.status);
    if (!e.witness.empty()) row["witness"] = e.witness;
    arr.push_back(std::move(row));
  }
  return arr;
}

ordered_json radical_json(const RadicalResult& r, int m) {
  ordered_json row;
  row["members"] = subset_json(r.bits, m);
  row["empty_family"] = r.empty_family;
  return row;
}

ordered_json ideals_section(const GammaSemiring& s) {
  ordered_json sec;
  const struct {
    const char* name;
    IdealKind kind;
  } kinds[] = {{"left", IdealKind::left()},
               {"right", IdealKind::right()},
               {"two_sided", IdealKind::two_sided()}};
  for (const auto& [name, kind] : kinds) {
    std::vector<IdealSubset> family = all_ideals(s, kind);
    ordered_json members = ordered_json::array();
    for (const IdealSubset& i : family) members.push_back(subset_json(i.bits, s.m));
    ordered_json row;
    row["count"] = family.size();
    row["members"] = std::move(members);
    sec[name] = std::move(row);
  }
  ordered_json taus = ordered_json::array();
  for (const IdealSubset& i : all_ideals(s, IdealKind::two_sided())) {
    ordered_json row;
    row["members"] = subset_json(i.bits, s.m);
    const ThresholdIndex t = tau(s, i.bits);
    if (t.value) {
      row["tau"] = *t.value;
    } else {
      row["tau"] = nullptr;
    }
    taus.push_back(std::move(row));
  }
  sec["tau_by_two_sided_ideal"] = std::move(taus);
  return sec;
}

ordered_json radicals_section(const GammaSemiring& s) {
  ordered_json sec;
  const struct {
    const char* name;
    Side side;
  } sides[] = {{"left", Side::Left}, {"right", Side::Right}, {"two_sided", Side::Two}};
  ordered_json prime, jac;
  for (const auto& [name, side] : sides) {
    prime[name] = radical_json(prime_radical(s, Mask{1}, side), s.m);
    jac[name] = radical_json(jacobson_radical(s, side), s.m);
  }
  sec["prime_radical_of_zero"] = std::move(prime);
  sec["jacobson_radical"] = std::move(jac);
  ordered_json diag = ordered_json::array();
  for (const IdealSubset& i : all_ideals(s, IdealKind::two_sided())) {
    ordered_json row;
    row["ideal"] = subset_json(i.bits, s.m);
    row["diagonal_radical"] = subset_json(diagonal_radical(s, i.bits), s.m);
    diag.push_back(std::move(row));
  }
  sec["diagonal_radicals"] = std::move(diag);
  return sec;
}

ordered_json spectra_section(const GammaSemiring& s) {
  ordered_json sec;
  const struct {
    const char* name;
    Side side;
  } sides[] = {{"left", Side::Left}, {"right", Side::Right}, {"two_sided", Side::Two}};
  for (const auto& [name, side] : sides) {
    const Spectrum spec = spectrum(s, side);
    ordered_json points = ordered_json::array();
    for (const IdealSubset& p : spec.points) points.push_back(subset_json(p.bits, s.m));
    ordered_json row;
    row["points"] = std::move(points);
    if (side == Side::Two) {
      const SpecializationReport sr = specialization_and_components(spec);
      row["minimal_points"] = sr.minimal_points;
      row["component_count"] = sr.components.size();
      const DiscretenessReport d = discreteness_check(s);
      row["jacobson_zero"] = d.jacobson_zero;
      row["discrete"] = d.discrete_topology;
    }
    sec[name] = std::move(row);
  }
  return sec;
}

ordered_json modules_section(const GammaSemiring& s, int j, int k_max) {
  ordered_json sec;
  sec["slot"] = j;
  sec["max_carrier"] = k_max;
  const std::vector<ModuleStructure> mods = enumerate_modules(s, j, k_max);
  sec["count"] = mods.size();
  std::size_t simple = 0;
  for (const ModuleStructure& mod : mods) {
    if (is_simple(mod)) ++simple;
  }
  sec["simple_count"] = simple;
  const PrimitiveIdealReport prim = primitive_ideals(s, j, k_max);
  ordered_json prims = ordered_json::array();
  for (const auto& entry : prim.ideals) prims.push_back(subset_json(entry.ideal, s.m));
  sec["primitive_ideals"] = std::move(prims);
  sec["excluded_annihilators"] = prim.excluded.size();
  sec["bound_note"] = prim.bound_note;
  return sec;
}

ordered_json decomposition_section(const GammaSemiring& s) {
  ordered_json sec;
  ordered_json idem = ordered_json::array();
  for (Element e : central_idempotents(s)) idem.push_back(int(e));
  sec["central_idempotents"] = std::move(idem);
  const AuditEntry w = wedderburn_check(s, 2, 2);
  ordered_json wrow;
  wrow["status"] = status_string(w.status);
  wrow["context"] = w.context;
  if (!w.witness.empty()) wrow["witness"] = w.witness;
  sec["wedderburn"] = std::move(wrow);
  sec["crt_zero_ideal_passes"] = crt_check(s, {Mask{1}}).all_pass();
  return sec;
}

std::string report_json_text(const GammaSemiring& s,
                             const std::vector<AuditEntry>& checks) {
  ordered_json j;
  j["format_version"] = 1;
  j["structure_digest"] = digest(s);
  j["checks"] = checks_json(checks);
  j["ideals"] = ideals_section(s);
  j["radicals"] = radicals_section(s);
  j["spectra"] = spectra_section(s);
  j["modules"] = modules_section(s, 2, 2);
  j["decomposition"] = decomposition_section(s);
  return j.dump(2);
}

void print_checks_text(const std::vector<AuditEntry>& checks) {
  for (const AuditEntry& e : checks) {
    std::cout << "  [" << status_string(e.status) << "] " << e.id;
    if (!e.context.empty()) std::cout << " (" << e.context << ")";
    if (!e.witness.empty()) std::cout << " witness: " << e.witness;
    std::cout << "\n";
  }
}

int cmd_validate(const std::string& file, const GlobalOpts& g) {
  const GammaSemiring s = load_with_mode(file, g);
  const ValidationReport rep = validate(s, g.max_violations);
  std::cout << "structure: m=" << s.m << " n=" << s.n << " r=" << s.r << " assoc="
            << (s.assoc_mode == AssocMode::PaperEnds ? "paper_ends" : "dornte") << "\n";
  if (rep.valid) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid: " << rep.violations.size() << " violations (capped at "
            << g.max_violations << " per axiom)\n";
  print_violations(rep);
  return 1;
}

int cmd_enumerate(SearchSpec spec, const std::string& add_file, bool all_additions,
                  int shard_depth, int shard_index, const std::string& out_dir,
                  const GlobalOpts& g) {
  if (g.assoc_mode == "paper_ends") spec.assoc_mode = AssocMode::PaperEnds;
  if (g.assoc_mode == "dornte") spec.assoc_mode = AssocMode::DornteAllWindows;

  if (all_additions) {
    spec.scan_all_additions = true;
  } else if (!add_file.empty()) {
    spec.add = load_addition(add_file);
  } else {
    throw UsageError("enumerate requires --add-file or --all-additions");
  }

  if ((shard_depth > 0) != (shard_index >= 0))
    throw UsageError("--shard-depth and --shard-index must be given together");
  if (shard_depth > 0) {
    const std::vector<SearchSpec> shards = shard(spec, shard_depth);
    if (shard_index >= static_cast<int>(shards.size()))
      throw UsageError("shard index exceeds the shard count");
    spec = shards[shard_index];
  }

  const EnumerationResult result = enumerate(spec);
  std::cout << "scanned=" << result.total_candidates_scanned
            << " valid=" << result.valid_count
            << " classes=" << result.canonical_class_count
            << " emitted=" << result.structures.size() << "\n";

  if (!out_dir.empty()) {
    ResultsStore store(out_dir);
    std::size_t written = 0;
    for (const GammaSemiring& s : result.structures) {
      store.put_structure(s);
      ++written;
    }
    store.rebuild_index();
    std::cout << "wrote " << written << " structure files to " << store.dir() << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& file, const std::string& format, const GlobalOpts& g) {
  const GammaSemiring s = load_with_mode(file, g);
  const ValidationReport rep = validate(s, g.max_violations);
  if (!rep.valid) {
    std::cout << "invalid: " << rep.violations.size() << " violations\n";
    print_violations(rep);
    return 1;
  }
  const std::vector<AuditEntry> checks = full_structure_audit(s);
  if (format == "json") {
    std::cout << report_json_text(s, checks) << "\n";
    return 0;
  }
  std::cout << "structure: m=" << s.m << " n=" << s.n << " r=" << s.r
            << " digest=" << digest(s) << "\n";
  std::size_t fails = 0, vacuous = 0;
  for (const AuditEntry& e : checks) {
    if (e.status == AuditStatus::Fail) ++fails;
    if (e.status == AuditStatus::Vacuous) ++vacuous;
  }
  std::cout << "checks: " << checks.size() << " total, " << fails << " failed, "
            << vacuous << " vacuous\n";
  print_checks_text(checks);
  return 0;
}

int cmd_classify(const std::string& dir, const GlobalOpts& g) {
  std::vector<std::string> paths;
  const std::filesystem::path root(dir);
  if (!std::filesystem::exists(root)) throw UsageError("no such directory: " + dir);
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.size() > 9 && name.substr(name.size() - 9) == ".gsr.json")
      paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    std::cout << "no structure files found under " << dir << "\n";
    return 0;
  }
  std::vector<GammaSemiring> batch;
  batch.reserve(paths.size());
  for (const std::string& p : paths) batch.push_back(load_with_mode(p, g));

  const std::vector<IsoClass> classes = partition(batch);
  std::cout << paths.size() << " structures in " << classes.size() << " classes\n";
  for (const IsoClass& cls : classes) {
    std::cout << "class " << cls.digest << " (" << cls.members.size() << " members)";
    if (cls.collision_flagged) std::cout << " COLLISION: " << cls.note;
    std::cout << "\n";
    for (std::size_t idx : cls.members) std::cout << "  " << paths[idx] << "\n";
  }
  return 0;
}

int cmd_modules(const std::string& file, int j, int k_max, const GlobalOpts& g) {
  const GammaSemiring s = load_with_mode(file, g);
  const std::vector<ModuleStructure> mods = enumerate_modules(s, j, k_max);
  std::cout << mods.size() << " modules at slot " << j << " with carrier at most "
            << k_max << "\n";
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const ModuleStructure& mod = mods[i];
    const AnnihilatorSet ann = annihilators(mod);
    std::cout << "  module#" << i << " k=" << mod.k
              << (is_simple(mod) ? " simple" : "")
              << " annihilator=" << mask_to_string(ann.two_sided.bits, s.m) << "\n";
  }
  const PrimitiveIdealReport prim = primitive_ideals(s, j, k_max);
  std::cout << "primitive ideals (" << prim.bound_note << "):\n";
  for (const auto& entry : prim.ideals)
    std::cout << "  " << mask_to_string(entry.ideal, s.m) << "\n";
  for (const AuditEntry& e : prim.excluded)
    std::cout << "  excluded: " << e.context << " (" << e.witness << ")\n";
  std::cout << "representation checks:\n";
  print_checks_text(audit_representation_theorems(s, j, k_max));
  return 0;
}

int cmd_decompose(const std::string& file, int pin, const GlobalOpts& g) {
  const GammaSemiring s = load_with_mode(file, g);
  if (pin >= 0) {
    PinningSpec pspec;
    pspec.e = static_cast<Element>(pin);
    const PinnedResult pr = pinned_ternary(s, pspec);
    std::cout << "pinned ternary structure:\n" << serialize_structure(pr.ternary) << "\n";
    print_checks_text(pr.audits);
    return 0;
  }
  std::vector<Element> idem = central_idempotents(s);
  std::cout << "central idempotents:";
  for (Element e : idem) std::cout << " " << int(e);
  std::cout << "\n";
  std::vector<AuditEntry> checks;
  checks.push_back(wedderburn_check(s, 2, 2));
  const Mask full = full_mask(s.m);
  std::vector<IdealSubset> two = all_ideals(s, IdealKind::two_sided());
  for (std::size_t i = 0; i < two.size(); ++i) {
    for (std::size_t k = i + 1; k < two.size(); ++k) {
      if (two[i].bits == full || two[k].bits == full) continue;
      if (!are_comaximal(s, two[i].bits, two[k].bits)) continue;
      const CrtReport rep = crt_check(s, {two[i].bits, two[k].bits});
      std::ostringstream ctx;
      ctx << "ideals " << mask_to_string(two[i].bits, s.m) << ", "
          << mask_to_string(two[k].bits, s.m);
      checks.push_back(rep.all_pass()
                           ? audit_pass("crt-pair", ctx.str())
                           : audit_fail("crt-pair", ctx.str(),
                                        rep.witnesses.empty() ? "stage flags failed"
                                                              : rep.witnesses.front()));
      checks.push_back(spectra_disjoint_union_check(s, {two[i].bits, two[k].bits}));
    }
  }
  print_checks_text(checks);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"finite n-ary gamma-semiring toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--assoc-mode", g.assoc_mode, "associativity mode override")
      ->check(CLI::IsMember({"paper_ends", "dornte"}));
  app.add_option("--max-violations", g.max_violations,
                 "violation cap per axiom in validation reports")
      ->check(CLI::PositiveNumber);

  int rc = 0;

  auto* vcmd = app.add_subcommand("validate", "check the axioms of a structure file");
  auto vfile = std::make_shared<std::string>();
  vcmd->add_option("file", *vfile, "structure file")->required();
  vcmd->callback([&, vfile]() { rc = cmd_validate(*vfile, g); });

  auto* ecmd = app.add_subcommand("enumerate", "search valid structures");
  auto espec = std::make_shared<SearchSpec>();
  auto eadd = std::make_shared<std::string>();
  auto eall = std::make_shared<bool>(false);
  auto edepth = std::make_shared<int>(0);
  auto eindex = std::make_shared<int>(-1);
  auto eout = std::make_shared<std::string>();
  ecmd->add_option("-m", espec->m, "carrier size")->required();
  ecmd->add_option("-n", espec->n, "arity")->required();
  ecmd->add_option("-r", espec->r, "gamma alphabet size")->required();
  auto* addopt = ecmd->add_option("--add-file", *eadd, "fixed addition table file");
  auto* allopt = ecmd->add_flag("--all-additions", *eall,
                                "scan every commutative monoid addition");
  addopt->excludes(allopt);
  allopt->excludes(addopt);
  ecmd->add_flag("--canonical", espec->canonical_only,
                 "emit only canonical representatives");
  auto* dopt = ecmd->add_option("--shard-depth", *edepth, "free cells pinned per shard");
  auto* iopt = ecmd->add_option("--shard-index", *eindex, "shard to run");
  dopt->needs(iopt);
  iopt->needs(dopt);
  ecmd->add_option("-o,--out", *eout, "results store directory");
  ecmd->callback([&, espec, eadd, eall, edepth, eindex, eout]() {
    rc = cmd_enumerate(*espec, *eadd, *eall, *edepth, *eindex, *eout, g);
  });

  auto* acmd = app.add_subcommand("analyze", "run the audit suite on a structure file");
  auto afile = std::make_shared<std::string>();
  auto aformat = std::make_shared<std::string>("text");
  acmd->add_option("file", *afile, "structure file")->required();
  acmd->add_option("--report", *aformat, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  acmd->callback([&, afile, aformat]() { rc = cmd_analyze(*afile, *aformat, g); });

  auto* ccmd = app.add_subcommand("classify", "partition stored structures into classes");
  auto cdir = std::make_shared<std::string>();
  ccmd->add_option("dir", *cdir, "directory holding .gsr.json files")->required();
  ccmd->callback([&, cdir]() { rc = cmd_classify(*cdir, g); });

  auto* mcmd = app.add_subcommand("modules", "enumerate module actions over a structure");
  auto mfile = std::make_shared<std::string>();
  auto mslot = std::make_shared<int>(2);
  auto mk = std::make_shared<int>(2);
  mcmd->add_option("file", *mfile, "structure file")->required();
  mcmd->add_option("--slot", *mslot, "module argument slot");
  mcmd->add_option("--max-carrier", *mk, "largest module carrier to try");
  mcmd->callback([&, mfile, mslot, mk]() { rc = cmd_modules(*mfile, *mslot, *mk, g); });

  auto* dcmd = app.add_subcommand("decompose", "idempotents, factorizations, pinning");
  auto dfile = std::make_shared<std::string>();
  auto dpin = std::make_shared<int>(-1);
  dcmd->add_option("file", *dfile, "structure file")->required();
  dcmd->add_option("--pin", *dpin, "central idempotent for arity reduction");
  dcmd->callback([&, dfile, dpin]() { rc = cmd_decompose(*dfile, *dpin, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error (line " << e.line << ", column " << e.column
              << "): " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace gsr
