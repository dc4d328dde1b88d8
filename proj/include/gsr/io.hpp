#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gsr/audit.hpp"
#include "gsr/core.hpp"

namespace gsr {

struct ParseError : public std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
};

// Canonical byte form: compact JSON with a fixed field order. This is the
// exact byte sequence the classifier digests, so it must stay stable.
std::string serialize_structure(const GammaSemiring& s);

// Inverse of serialize_structure up to whitespace; parse(serialize(s)) == s.
// Malformed input raises ParseError with a line and column.
GammaSemiring parse_structure(const std::string& text);

GammaSemiring load_structure(const std::string& path);
void save_structure(const std::string& path, const GammaSemiring& s);

// Standalone addition table file ("format_version", "m", "add").
AdditionTable parse_addition(const std::string& text);
AdditionTable load_addition(const std::string& path);

std::string sha256_hex(const std::string& bytes);

std::string status_string(AuditStatus status);

// Content-addressed store layout:
//   <dir>/structures/<digest>.gsr.json   canonical representative
//   <dir>/reports/<digest>.report.json
//   <dir>/index.json                     rebuilt by scanning structures/
struct IndexEntry {
  std::string digest;
  int m = 0;
  int n = 0;
  int r = 0;
  bool valid = false;
  bool symmetric = false;
  bool jacobson_zero = false;
  int spectrum_size = 0;
};

class ResultsStore {
 public:
  explicit ResultsStore(std::string dir);

  // Canonicalizes, writes the representative idempotently, returns the digest.
  std::string put_structure(const GammaSemiring& s);
  void put_report(const std::string& digest, const std::string& json_text);

  // Derived purely from the files on disk, written sorted via temp + rename,
  // so identical content always yields identical bytes.
  std::vector<IndexEntry> rebuild_index() const;

  std::string structure_path(const std::string& digest) const;
  std::string report_path(const std::string& digest) const;
  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
};

}  // namespace gsr
