#pragma once

// Named code registry: line-based record files describing classical codes,
// plus codes, and sign-allocated codes, with converters into the live
// library types.
//
// Record grammar (one record per file):
//   name: <slug>                  required
//   aliases: <slug> <slug> ...    optional
//   kind: classical|plus|signed   required
//   source: published|derived     required
//   command: <shell command>      required for derived records
//   note: <free text>             optional
//   n: <int>                      required
//   k: <int>  /  K: <int>         classical / quantum dimension
//   d: <int>                      classical declared distance (optional)
//   d1: <int>  d2: <int>          quantum declared distances (optional)
//   offset: <hex>                 signed codes, optional
// plus matrix blocks ("<label>:" on its own line, then '0'/'1' rows, ended
// by a blank line or end of file): check, generator (classical), h1, disp
// (plus), gcos, disp (signed), and a "signs:" block of hex rows (signed).
// Lines starting with '#' are comments.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qec/codes.hpp"
#include "qec/cssplus.hpp"
#include "qec/qstate.hpp"

namespace qec {

struct RegistryRecord {
  std::string name;
  std::vector<std::string> aliases;
  std::string kind;    // "classical" | "plus" | "signed"
  std::string source;  // "published" | "derived"
  std::optional<std::string> command;
  std::optional<std::string> note;

  int n = 0;
  std::optional<int> k;   // classical dimension
  std::optional<int> K;   // quantum dimension
  std::optional<int> d;   // classical declared distance
  std::optional<int> d1;  // quantum declared distances
  std::optional<int> d2;

  std::optional<BinMatrix> check;
  std::optional<BinMatrix> generator;
  std::optional<BinMatrix> h1;
  std::optional<BinMatrix> disp;
  std::optional<BinMatrix> gcos;
  std::vector<std::string> signs;      // hex rows, one per displacement row
  std::optional<std::string> offset;   // hex
};

/// Parse one record; throws format_error with a line reference on problems,
/// including structural validation for the record's kind.
RegistryRecord parse_record(std::string_view text);

/// Serialize in the canonical field order; parse(serialize(r)) == r.
std::string serialize_record(const RegistryRecord& rec);

class Registry {
 public:
  /// Load every *.txt file under `dir` (sorted by filename).  Throws on
  /// parse errors or duplicate names/aliases.
  static Registry load_dir(const std::filesystem::path& dir);

  /// Look up by name or alias; nullptr when absent.
  const RegistryRecord* find(const std::string& name_or_alias) const;
  /// All records sorted by name.
  std::vector<const RegistryRecord*> all() const;
  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::string, RegistryRecord> records_;
  std::map<std::string, std::string> alias_to_name_;
};

/// Instantiate a classical record (kind "classical").
LinearCode to_linear(const RegistryRecord& rec);
/// Instantiate a plus record (kind "plus").
PlusCode to_plus(const RegistryRecord& rec);
/// Instantiate a signed record, or embed a plus record with all-plus signs.
SignedCode to_signed(const RegistryRecord& rec);

}  // namespace qec
