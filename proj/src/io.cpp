#include "gsr/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsr/classify.hpp"
#include "gsr/primes.hpp"
#include "gsr/spectra.hpp"

#include <openssl/evp.h>

namespace gsr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : std::size_t{0}, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, 1, 1); }

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << col;
    throw ParseError(msg.str(), line, col);
  }
}

int require_int(const ordered_json& j, const char* field, int lo, int hi) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(std::string("missing or non-integer field \"") + field + "\"");
  const int v = j[field].get<int>();
  if (v < lo || v > hi) {
    std::ostringstream msg;
    msg << "field \"" << field << "\" = " << v << " outside [" << lo << ", " << hi << "]";
    fail(msg.str());
  }
  return v;
}

std::vector<Element> require_row(const ordered_json& row, std::size_t len, int m,
                                 const char* what) {
  if (!row.is_array() || row.size() != len) {
    std::ostringstream msg;
    msg << what << " must be an array of " << len << " integers";
    fail(msg.str());
  }
  std::vector<Element> out;
  out.reserve(len);
  for (const auto& cell : row) {
    if (!cell.is_number_integer()) fail(std::string(what) + " holds a non-integer cell");
    const int v = cell.get<int>();
    if (v < 0 || v >= m) {
      std::ostringstream msg;
      msg << what << " holds the out-of-carrier value " << v;
      fail(msg.str());
    }
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write file: " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string serialize_structure(const GammaSemiring& s) {
  ordered_json j;
  j["format_version"] = 1;
  j["m"] = s.m;
  j["n"] = s.n;
  j["r"] = s.r;
  j["assoc_mode"] = (s.assoc_mode == AssocMode::PaperEnds) ? "paper_ends" : "dornte";
  ordered_json add = ordered_json::array();
  for (int i = 0; i < s.m; ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < s.m; ++k) row.push_back(static_cast<int>(s.add.at(i, k)));
    add.push_back(std::move(row));
  }
  j["add"] = std::move(add);
  ordered_json mu = ordered_json::array();
  for (const auto& table : s.mu) {
    ordered_json row = ordered_json::array();
    for (Element v : table) row.push_back(static_cast<int>(v));
    mu.push_back(std::move(row));
  }
  j["mu"] = std::move(mu);
  return j.dump();
}

GammaSemiring parse_structure(const std::string& text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) fail("top level must be a JSON object");
  if (require_int(j, "format_version", 1, 1) != 1) fail("unsupported format_version");

  GammaSemiring s;
  s.m = require_int(j, "m", 1, 16);
  s.n = require_int(j, "n", 3, 8);
  s.r = require_int(j, "r", 1, 16);

  if (!j.contains("assoc_mode") || !j["assoc_mode"].is_string())
    fail("missing or non-string field \"assoc_mode\"");
  const std::string mode = j["assoc_mode"].get<std::string>();
  if (mode == "paper_ends") {
    s.assoc_mode = AssocMode::PaperEnds;
  } else if (mode == "dornte") {
    s.assoc_mode = AssocMode::DornteAllWindows;
  } else {
    fail("assoc_mode must be \"paper_ends\" or \"dornte\"");
  }

  if (!j.contains("add") || !j["add"].is_array() ||
      j["add"].size() != static_cast<std::size_t>(s.m))
    fail("field \"add\" must be an array of m rows");
  s.add.m = s.m;
  s.add.cells.clear();
  for (const auto& row : j["add"]) {
    std::vector<Element> cells = require_row(row, static_cast<std::size_t>(s.m), s.m, "an add row");
    s.add.cells.insert(s.add.cells.end(), cells.begin(), cells.end());
  }

  const std::size_t gcount = s.gamma_tuple_count();
  const std::size_t csize = s.mu_table_size();
  if (!j.contains("mu") || !j["mu"].is_array() || j["mu"].size() != gcount) {
    std::ostringstream msg;
    msg << "field \"mu\" must be an array of " << gcount << " gamma tables";
    fail(msg.str());
  }
  s.mu.clear();
  for (const auto& row : j["mu"]) s.mu.push_back(require_row(row, csize, s.m, "a mu table"));
  check_shape(s);
  return s;
}

GammaSemiring load_structure(const std::string& path) {
  return parse_structure(read_file(path));
}

void save_structure(const std::string& path, const GammaSemiring& s) {
  atomic_write(path, serialize_structure(s));
}

AdditionTable parse_addition(const std::string& text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) fail("top level must be a JSON object");
  if (require_int(j, "format_version", 1, 1) != 1) fail("unsupported format_version");
  AdditionTable a;
  a.m = require_int(j, "m", 1, 16);
  if (!j.contains("add") || !j["add"].is_array() ||
      j["add"].size() != static_cast<std::size_t>(a.m))
    fail("field \"add\" must be an array of m rows");
  for (const auto& row : j["add"]) {
    std::vector<Element> cells = require_row(row, static_cast<std::size_t>(a.m), a.m, "an add row");
    a.cells.insert(a.cells.end(), cells.begin(), cells.end());
  }
  return a;
}

AdditionTable load_addition(const std::string& path) {
  return parse_addition(read_file(path));
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("digest computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string status_string(AuditStatus status) { return to_string(status); }

ResultsStore::ResultsStore(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(std::filesystem::path(dir_) / "structures");
  std::filesystem::create_directories(std::filesystem::path(dir_) / "reports");
}

std::string ResultsStore::structure_path(const std::string& digest) const {
  return (std::filesystem::path(dir_) / "structures" / (digest + ".gsr.json")).string();
}

std::string ResultsStore::report_path(const std::string& digest) const {
  return (std::filesystem::path(dir_) / "reports" / (digest + ".report.json")).string();
}

std::string ResultsStore::put_structure(const GammaSemiring& s) {
  const CanonicalForm cf = canonical_form(s);
  atomic_write(structure_path(cf.digest), serialize_structure(cf.structure));
  return cf.digest;
}

void ResultsStore::put_report(const std::string& digest, const std::string& json_text) {
  atomic_write(report_path(digest), json_text);
}

std::vector<IndexEntry> ResultsStore::rebuild_index() const {
  const std::filesystem::path sdir = std::filesystem::path(dir_) / "structures";
  std::vector<std::string> names;
  if (std::filesystem::exists(sdir)) {
    for (const auto& entry : std::filesystem::directory_iterator(sdir)) {
      const std::string name = entry.path().filename().string();
      if (name.size() > 9 && name.substr(name.size() - 9) == ".gsr.json")
        names.push_back(name);
    }
  }
  std::sort(names.begin(), names.end());

  std::vector<IndexEntry> entries;
  for (const std::string& name : names) {
    const GammaSemiring s = load_structure((sdir / name).string());
    IndexEntry e;
    e.digest = name.substr(0, name.size() - 9);
    e.m = s.m;
    e.n = s.n;
    e.r = s.r;
    e.valid = validate(s).valid;
    e.symmetric = symmetry_profile(s).empty();
    const RadicalResult jr = jacobson_radical(s, Side::Two);
    e.jacobson_zero = !jr.empty_family && jr.bits == Mask{1};
    e.spectrum_size = static_cast<int>(spectrum(s, Side::Two).points.size());
    entries.push_back(std::move(e));
  }

  ordered_json j;
  j["format_version"] = 1;
  ordered_json list = ordered_json::array();
  for (const IndexEntry& e : entries) {
    ordered_json row;
    row["digest"] = e.digest;
    row["m"] = e.m;
    row["n"] = e.n;
    row["r"] = e.r;
    row["valid"] = e.valid;
    row["symmetric"] = e.symmetric;
    row["jacobson_zero"] = e.jacobson_zero;
    row["spectrum_size"] = e.spectrum_size;
    list.push_back(std::move(row));
  }
  j["entries"] = std::move(list);
  atomic_write(std::filesystem::path(dir_) / "index.json", j.dump());
  return entries;
}

}  // namespace gsr
