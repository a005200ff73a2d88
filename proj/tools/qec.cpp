// qec: command-line surface for the code library.
//
// Subcommands: registry (list/show), verify, expand, table (nmin/bound),
// search (signs/displacements), make (cyclic/plus).  Every command accepts
// --json for structured output carrying the same data as the text form.
// Exit codes: 0 success/pass, 1 verified-fail or no-result, 2 usage or data
// error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qec/codes.hpp"
#include "qec/cssplus.hpp"
#include "qec/format.hpp"
#include "qec/gf2.hpp"
#include "qec/qstate.hpp"
#include "qec/registry.hpp"
#include "qec/runtime.hpp"
#include "qec/search.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qec;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Usage/data problem: message to stderr, exit 2.
struct cli_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ctx {
  bool json = false;
  fs::path data_dir;
  std::optional<Registry> registry;  // loaded on first use

  const Registry& reg() {
    if (!registry) registry = Registry::load_dir(data_dir / "registry");
    return *registry;
  }
};

/// Resolve NAME to a record: a path to a record file when it names one,
/// otherwise a registry lookup (names and aliases).
RegistryRecord resolve_record(Ctx& ctx, const std::string& name) {
  if (name.find('/') != std::string::npos || fs::exists(name)) {
    std::ifstream in(name);
    if (!in.good()) throw cli_error("cannot open record file: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_record(buf.str());
  }
  const RegistryRecord* rec = ctx.reg().find(name);
  if (!rec) throw cli_error("unknown registry name: " + name);
  return *rec;
}

/// Matrix file: '0'/'1' rows, one per line; '#' comments and blank lines
/// ignored.
BinMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw cli_error("cannot open matrix file: " + path);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw cli_error("matrix file is empty: " + path);
  return BinMatrix::from_strings(rows);
}

std::vector<std::string> matrix_rows(const BinMatrix& m) {
  std::vector<std::string> rows;
  rows.reserve(m.n_rows());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    rows.push_back(m.row(i).to_string());
  return rows;
}

/// Hex when the length allows it, bit string otherwise.
std::string sv_str(const SignVector& sv) {
  return sv.length() % 4 == 0 ? sv.to_hex() : sv.to_bit_string();
}

json record_to_json(const RegistryRecord& r) {
  json j;
  j["name"] = r.name;
  j["aliases"] = r.aliases;
  j["kind"] = r.kind;
  j["source"] = r.source;
  if (r.command) j["command"] = *r.command;
  if (r.note) j["note"] = *r.note;
  j["n"] = r.n;
  if (r.k) j["k"] = *r.k;
  if (r.K) j["K"] = *r.K;
  if (r.d) j["d"] = *r.d;
  if (r.d1) j["d1"] = *r.d1;
  if (r.d2) j["d2"] = *r.d2;
  if (r.check) j["check"] = matrix_rows(*r.check);
  if (r.generator) j["generator"] = matrix_rows(*r.generator);
  if (r.h1) j["h1"] = matrix_rows(*r.h1);
  if (r.gcos) j["gcos"] = matrix_rows(*r.gcos);
  if (r.disp) j["disp"] = matrix_rows(*r.disp);
  if (!r.signs.empty()) j["signs"] = r.signs;
  if (r.offset) j["offset"] = *r.offset;
  return j;
}

/// Output plumbing.  Text mode: `text` to stdout, or when a record is being
/// emitted, the record to stdout and the report to stderr.  JSON mode: one
/// document on stdout (the emitted record rides along as a string field).
void deliver(const Ctx& ctx, json& doc, const std::string& text,
             const std::optional<std::string>& record_text = std::nullopt) {
  if (ctx.json) {
    if (record_text) doc["record"] = *record_text;
    std::cout << doc.dump(2) << "\n";
  } else if (record_text) {
    std::cerr << text;
    std::cout << *record_text;
  } else {
    std::cout << text;
  }
}

// ---- budgets -----------------------------------------------------------------

struct BudgetFlags {
  int t = -1;
  int tx = -1;
  int tz = -1;

  void validate() const {
    if (t >= 0 && (tx >= 0 || tz >= 0))
      throw cli_error("--t conflicts with --tx/--tz");
    if ((tx >= 0) != (tz >= 0))
      throw cli_error("--tx and --tz must be given together");
  }
  bool any() const { return t >= 0 || tx >= 0; }
};

json budget_json(const ErrorBudget& b) {
  if (b.is_joint()) return {{"mode", "joint"}, {"t", b.joint_t}};
  return {{"mode", "split"}, {"tx", b.tx}, {"tz", b.tz}};
}

std::string budget_str(const ErrorBudget& b) {
  std::ostringstream s;
  if (b.is_joint())
    s << "joint t=" << b.joint_t;
  else
    s << "split tx=" << b.tx << " tz=" << b.tz;
  return s.str();
}

/// Run the oracle, narrate the report, and fold it into the JSON document.
bool run_oracle(const SignedCode& code, const ErrorBudget& budget, json& doc,
                std::ostream& text) {
  OrthogonalityReport rep;
  try {
    rep = verify_orthogonal(code, budget);
  } catch (const dimension_error& e) {
    throw cli_error(std::string(e.what()) +
                    " (use --classical-only to skip the quantum oracle)");
  }
  text << "budget: " << budget_str(budget) << "\n";
  text << "oracle: " << (rep.pass ? "pass" : "FAIL")
       << "  pairs: " << rep.pair_count
       << "  conflicts: " << rep.conflict_count << "\n";
  json conflicts = json::array();
  for (const Conflict& c : rep.first_conflicts) {
    text << "  conflict: b=" << c.b1 << " [" << c.e1.label() << "]  vs  b="
         << c.b2 << " [" << c.e2.label() << "]\n";
    conflicts.push_back({{"b1", c.b1},
                         {"e1", c.e1.label()},
                         {"b2", c.b2},
                         {"e2", c.e2.label()}});
  }
  doc["budget"] = budget_json(budget);
  doc["oracle"] = {{"pass", rep.pass},
                   {"pair_count", rep.pair_count},
                   {"conflict_count", rep.conflict_count},
                   {"first_conflicts", conflicts}};
  return rep.pass;
}

// ---- registry ------------------------------------------------------------------

int cmd_registry_list(Ctx& ctx) {
  json doc;
  doc["command"] = "registry list";
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(22) << "name" << std::setw(11) << "kind"
       << std::setw(11) << "source" << std::setw(18) << "params"
       << "aliases\n";
  for (const RegistryRecord* r : ctx.reg().all()) {
    std::ostringstream params;
    if (r->kind == "classical") {
      params << "[" << r->n << "," << (r->k ? std::to_string(*r->k) : "?")
             << "," << (r->d ? std::to_string(*r->d) : "?") << "]";
    } else {
      params << "{" << r->n << "," << (r->K ? std::to_string(*r->K) : "?");
      if (r->kind == "plus") {
        params << "," << (r->d1 ? std::to_string(*r->d1) : "?");
        if (r->d2 && r->d1 != r->d2) params << "/" << *r->d2;
        params << "}+";
      } else {
        params << "," << (r->d ? std::to_string(*r->d) : "?") << "}";
      }
    }
    std::string aliases;
    for (const std::string& a : r->aliases)
      aliases += (aliases.empty() ? "" : " ") + a;
    text << std::left << std::setw(22) << r->name << std::setw(11) << r->kind
         << std::setw(11) << r->source << std::setw(18) << params.str()
         << aliases << "\n";
    json row = record_to_json(*r);
    row.erase("check");
    row.erase("generator");
    row.erase("h1");
    row.erase("gcos");
    row.erase("disp");
    row.erase("signs");
    row.erase("offset");
    rows.push_back(std::move(row));
  }
  text << "total: " << ctx.reg().size() << "\n";
  doc["records"] = std::move(rows);
  doc["count"] = ctx.reg().size();
  deliver(ctx, doc, text.str());
  return kPass;
}

int cmd_registry_show(Ctx& ctx, const std::string& name) {
  RegistryRecord rec = resolve_record(ctx, name);
  std::ostringstream text;
  text << serialize_record(rec);
  json doc;
  doc["command"] = "registry show";
  doc["record"] = record_to_json(rec);
  if (rec.kind == "signed" && rec.K && *rec.K <= 8) {
    SignedCode code = to_signed(rec);
    text << "# stanza sign vectors (b ascending; rightmost bit = word m=0)\n";
    json stanzas = json::array();
    for (std::uint32_t b = 0; b < (1u << code.K()); ++b) {
      std::string bits = code.sign_vector(b).to_bit_string();
      text << "# b=" << b << ": " << bits << "\n";
      stanzas.push_back(bits);
    }
    doc["stanza_signs"] = std::move(stanzas);
  }
  deliver(ctx, doc, text.str());
  return kPass;
}

// ---- verify --------------------------------------------------------------------

int verify_classical(Ctx& ctx, const RegistryRecord& rec,
                     const BudgetFlags& bf) {
  if (bf.tx >= 0)
    throw cli_error("split budgets do not apply to classical records");
  LinearCode c = to_linear(rec);
  json doc;
  doc["command"] = "verify";
  doc["name"] = rec.name;
  doc["kind"] = rec.kind;
  doc["n"] = c.n();
  doc["k"] = c.k();
  std::ostringstream text;
  text << "name: " << rec.name << "  kind: classical  n: " << c.n()
       << "  k: " << c.k() << "\n";
  bool pass = true;
  int dist = c.min_distance();
  text << "distance: " << dist << "\n";
  doc["distance"] = dist;
  if (rec.d) {
    bool match = dist == *rec.d;
    pass = pass && match;
    text << "declared: d=" << *rec.d << (match ? "  match" : "  MISMATCH")
         << "\n";
    doc["declared_d"] = *rec.d;
    doc["declared_match"] = match;
  }
  if (bf.t >= 0) {
    bool ok = dist >= 2 * bf.t + 1;
    pass = pass && ok;
    text << "budget: t=" << bf.t << "  needs d >= " << 2 * bf.t + 1
         << (ok ? "  satisfied" : "  NOT satisfied") << "\n";
    doc["t"] = bf.t;
    doc["t_satisfied"] = ok;
  }
  text << (pass ? "PASS" : "FAIL") << "\n";
  doc["pass"] = pass;
  deliver(ctx, doc, text.str());
  return pass ? kPass : kFail;
}

int verify_plus_record(Ctx& ctx, const RegistryRecord& rec,
                       const BudgetFlags& bf, bool classical_only) {
  PlusCode p = to_plus(rec);
  CodeParams params = verify_plus(p);
  json doc;
  doc["command"] = "verify";
  doc["name"] = rec.name;
  doc["kind"] = rec.kind;
  doc["n"] = params.n;
  doc["K"] = params.K;
  doc["classical"] = {{"d1", params.d1},
                      {"d2", params.d2},
                      {"t1", params.t1},
                      {"t2", params.t2}};
  std::ostringstream text;
  text << "name: " << rec.name << "  kind: plus  n: " << params.n
       << "  K: " << params.K << "\n";
  text << "classical: d1=" << params.d1 << " d2=" << params.d2
       << "  t1=" << params.t1 << " t2=" << params.t2 << "\n";
  bool pass = true;
  if (rec.d1 || rec.d2) {
    bool match = (!rec.d1 || params.d1 == *rec.d1) &&
                 (!rec.d2 || params.d2 == *rec.d2);
    pass = pass && match;
    text << "declared: d1=" << (rec.d1 ? std::to_string(*rec.d1) : "-")
         << " d2=" << (rec.d2 ? std::to_string(*rec.d2) : "-")
         << (match ? "  match" : "  MISMATCH") << "\n";
    doc["declared_match"] = match;
  }
  // The classical claim implied by an explicit budget.
  int want_tx = bf.t >= 0 ? bf.t : bf.tx;
  int want_tz = bf.t >= 0 ? bf.t : bf.tz;
  if (bf.any()) {
    bool ok = params.t1 >= want_tx && params.t2 >= want_tz;
    pass = pass && ok;
    text << "budget check: needs t1 >= " << want_tx << ", t2 >= " << want_tz
         << (ok ? "  satisfied" : "  NOT satisfied") << "\n";
    doc["budget_satisfied"] = ok;
  }
  if (!classical_only) {
    ErrorBudget budget =
        bf.t >= 0 ? ErrorBudget::joint(bf.t)
                  : ErrorBudget::split(bf.tx >= 0 ? bf.tx : params.t1,
                                       bf.tz >= 0 ? bf.tz : params.t2);
    pass = run_oracle(SignedCode::all_plus(p), budget, doc, text) && pass;
  }
  text << (pass ? "PASS" : "FAIL") << "\n";
  doc["pass"] = pass;
  deliver(ctx, doc, text.str());
  return pass ? kPass : kFail;
}

int verify_signed(Ctx& ctx, const RegistryRecord& rec, const BudgetFlags& bf,
                  bool classical_only) {
  if (classical_only)
    throw cli_error(
        "signed records carry no classical distance claim; the "
        "orthogonality oracle is their verifier");
  SignedCode code = to_signed(rec);
  json doc;
  doc["command"] = "verify";
  doc["name"] = rec.name;
  doc["kind"] = rec.kind;
  doc["n"] = code.n();
  doc["K"] = code.K();
  std::ostringstream text;
  text << "name: " << rec.name << "  kind: signed  n: " << code.n()
       << "  K: " << code.K() << "\n";
  int default_t = rec.d ? (*rec.d - 1) / 2 : 1;
  ErrorBudget budget = bf.tx >= 0 ? ErrorBudget::split(bf.tx, bf.tz)
                                  : ErrorBudget::joint(bf.t >= 0 ? bf.t
                                                                 : default_t);
  bool pass = run_oracle(code, budget, doc, text);
  text << (pass ? "PASS" : "FAIL") << "\n";
  doc["pass"] = pass;
  deliver(ctx, doc, text.str());
  return pass ? kPass : kFail;
}

int cmd_verify(Ctx& ctx, const std::string& name, const BudgetFlags& bf,
               bool classical_only) {
  bf.validate();
  RegistryRecord rec = resolve_record(ctx, name);
  if (rec.kind == "classical") return verify_classical(ctx, rec, bf);
  if (rec.kind == "plus")
    return verify_plus_record(ctx, rec, bf, classical_only);
  return verify_signed(ctx, rec, bf, classical_only);
}

// ---- expand --------------------------------------------------------------------

int cmd_expand(Ctx& ctx, const std::string& name) {
  RegistryRecord rec = resolve_record(ctx, name);
  if (rec.kind == "classical")
    throw cli_error("expand applies to plus and signed records");
  SignedCode code = to_signed(rec);
  if (!ctx.json) {
    std::cout << expand_listing(code);
    return kPass;
  }
  json doc;
  doc["command"] = "expand";
  doc["name"] = rec.name;
  doc["n"] = code.n();
  doc["K"] = code.K();
  doc["w"] = code.w();
  json stanzas = json::array();
  for (std::uint32_t b = 0; b < (1u << code.K()); ++b) {
    json terms = json::array();
    SignVector signs = code.sign_vector(b);
    for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(code.w()); ++m) {
      terms.push_back({{"sign", signs.get(m) ? -1 : +1},
                       {"word", code.word_at(b, m).to_string()}});
    }
    stanzas.push_back({{"b", b}, {"terms", std::move(terms)}});
  }
  doc["stanzas"] = std::move(stanzas);
  std::cout << doc.dump(2) << "\n";
  return kPass;
}

// ---- table ---------------------------------------------------------------------

int cmd_table_nmin(Ctx& ctx, const std::string& dtable_flag, int d,
                   int dperp) {
  fs::path file = dtable_flag.empty()
                      ? ctx.data_dir / "distance_table.txt"
                      : fs::path(dtable_flag);
  DistanceTable table = DistanceTable::load(file);
  json doc;
  doc["command"] = "table nmin";
  doc["table_file"] = file.string();
  doc["max_n"] = table.max_n();

  if ((d >= 0) != (dperp >= 0))
    throw cli_error("--d and --dperp must be given together");
  if (d >= 0) {
    int n = n_min_bound(d, dperp, table);  // coverage errors exit 2
    std::ostringstream text;
    text << "n_min(d=" << d << ", dperp=" << dperp << ") = " << n << "\n";
    doc["d"] = d;
    doc["dperp"] = dperp;
    doc["n_min"] = n;
    deliver(ctx, doc, text.str());
    return kPass;
  }

  std::ostringstream text;
  text << "smallest n permitting a dual pair of codes with distances d and "
          "dperp\n(from "
       << file.string() << ", max n " << table.max_n()
       << "; '-' = beyond table coverage)\n\n";
  text << std::setw(8) << "dperp\\d";
  for (int col = 3; col <= 15; col += 2) text << std::setw(5) << col;
  text << "\n";
  json cells = json::array();
  json uncovered = json::array();
  for (int dp = 3; dp <= 15; dp += 2) {
    text << std::setw(8) << dp;
    for (int dd = 3; dd <= dp; dd += 2) {
      try {
        int n = n_min_bound(dd, dp, table);
        text << std::setw(5) << n;
        cells.push_back({{"d", dd}, {"dperp", dp}, {"n_min", n}});
      } catch (const error&) {
        text << std::setw(5) << "-";
        uncovered.push_back({{"d", dd}, {"dperp", dp}});
      }
    }
    text << "\n";
  }
  doc["cells"] = std::move(cells);
  doc["uncovered"] = std::move(uncovered);
  deliver(ctx, doc, text.str());
  return kPass;
}

int cmd_table_bound(Ctx& ctx, std::vector<int> Ks, int t, int n) {
  if (Ks.empty()) throw cli_error("--K is required");
  json doc;
  doc["command"] = "table bound";
  doc["t"] = t;
  std::ostringstream text;
  if (n >= 0) {
    if (Ks.size() != 1)
      throw cli_error("--n applies to a single --K value");
    BoundReport rep = quantum_hamming_bound(n, Ks[0], t);
    text << "n=" << n << " K=" << Ks[0] << " t=" << t << ": 2^K sum 3^i C(n,i) = "
         << rep.lhs << (rep.satisfied ? " <= " : " > ") << rep.rhs
         << " = 2^n : " << (rep.satisfied ? "satisfied" : "violated")
         << (rep.perfect ? " (perfect)" : "") << "\n";
    doc["n"] = n;
    doc["K"] = Ks[0];
    doc["lhs"] = rep.lhs;
    doc["rhs"] = rep.rhs;
    doc["satisfied"] = rep.satisfied;
    doc["perfect"] = rep.perfect;
    deliver(ctx, doc, text.str());
    return rep.satisfied ? kPass : kFail;
  }
  json rows = json::array();
  for (int K : Ks) {
    int nmin = min_n_for(K, t);
    BoundReport rep = quantum_hamming_bound(nmin, K, t);
    text << "K=" << K << " t=" << t << ": n_min=" << nmin
         << (rep.perfect ? "  (perfect)" : "") << "\n";
    rows.push_back({{"K", K}, {"t", t}, {"n_min", nmin},
                    {"perfect", rep.perfect}});
  }
  doc["rows"] = std::move(rows);
  deliver(ctx, doc, text.str());
  return kPass;
}

// ---- search --------------------------------------------------------------------

/// gcos/disp pair a sign search runs over: a signed record contributes its
/// own matrices (stored signs ignored); a plus record contributes h2 and D.
std::pair<BinMatrix, BinMatrix> skeleton_of(const RegistryRecord& rec) {
  if (rec.kind == "signed") {
    BinMatrix disp = rec.disp ? *rec.disp : BinMatrix::empty(rec.n);
    return {*rec.gcos, disp};
  }
  if (rec.kind == "plus") {
    PlusCode p = to_plus(rec);
    return {p.h2(), p.displacement()};
  }
  throw cli_error("record '" + rec.name +
                  "' is classical; a sign-search skeleton needs a plus or "
                  "signed record");
}

int cmd_search_signs(Ctx& ctx, const std::string& skeleton,
                     const std::string& gcos_file,
                     const std::string& disp_file, const BudgetFlags& bf,
                     bool no_offset, bool exhaustive, std::uint64_t limit,
                     const std::string& emit) {
  bf.validate();
  if (skeleton.empty() == (gcos_file.empty() && disp_file.empty()))
    throw cli_error("give either --skeleton NAME or --gcos/--disp files");
  if (gcos_file.empty() != disp_file.empty())
    throw cli_error("--gcos and --disp must be given together");
  if (exhaustive && limit == 0)
    throw cli_error("--exhaustive requires --limit");

  BinMatrix gcos = BinMatrix::empty(0);
  BinMatrix disp = BinMatrix::empty(0);
  if (!skeleton.empty()) {
    RegistryRecord rec = resolve_record(ctx, skeleton);
    std::tie(gcos, disp) = skeleton_of(rec);
  } else {
    gcos = read_matrix_file(gcos_file);
    disp = read_matrix_file(disp_file);
  }

  ErrorBudget budget = bf.tx >= 0
                           ? ErrorBudget::split(bf.tx, bf.tz)
                           : ErrorBudget::joint(bf.t >= 0 ? bf.t : 1);
  SignSearchOptions options;
  options.allow_offset = !no_offset;
  options.exhaustive = exhaustive;
  options.candidate_limit = limit;
  SignSearchResult result = search_signs(gcos, disp, budget, options);

  json doc;
  doc["command"] = "search signs";
  doc["n"] = gcos.n_cols();
  doc["r"] = gcos.n_rows();
  doc["K"] = disp.n_rows();
  doc["budget"] = budget_json(budget);
  doc["mode"] = exhaustive ? "exhaustive" : "linear";
  doc["space_size"] = result.space_size;
  doc["candidates_examined"] = result.candidates_examined;
  doc["nodes_visited"] = result.nodes_visited;
  doc["aborted"] = result.aborted;
  doc["found"] = result.code.has_value();

  std::ostringstream text;
  text << "skeleton: n=" << gcos.n_cols() << " r=" << gcos.n_rows()
       << " w=" << (1u << gcos.n_rows()) << " K=" << disp.n_rows() << "\n";
  text << "budget: " << budget_str(budget) << "\n";
  text << "mode: " << (exhaustive ? "exhaustive" : "linear sign codes")
       << (no_offset ? ", no offset" : ", with offset")
       << "  space: " << result.space_size << "\n";
  text << "examined: " << result.candidates_examined
       << "  nodes: " << result.nodes_visited << "\n";

  if (!result.code) {
    text << (result.aborted ? "aborted at candidate limit\n" : "")
         << "NO RESULT\n";
    deliver(ctx, doc, text.str());
    return kFail;
  }

  const SignedCode& code = *result.code;
  json signs = json::array();
  text << "signs:\n";
  for (const SignVector& sv : code.sign_gen()) {
    text << "  " << sv_str(sv) << "\n";
    signs.push_back(sv_str(sv));
  }
  text << "offset: " << sv_str(code.offset()) << "\n";
  doc["signs"] = std::move(signs);
  doc["offset"] = sv_str(code.offset());
  doc["oracle"] = {{"pass", result.report.pass},
                   {"pair_count", result.report.pair_count},
                   {"conflict_count", result.report.conflict_count}};
  text << "oracle: pass  pairs: " << result.report.pair_count << "\n";
  text << "FOUND\n";

  std::optional<std::string> record_text;
  if (!emit.empty()) {
    if (code.w() % 4 != 0)
      throw cli_error("record sign rows need w divisible by 4");
    RegistryRecord out;
    out.name = emit;
    out.kind = "signed";
    out.source = "derived";
    std::ostringstream cmd;
    cmd << "qec search signs";
    if (!skeleton.empty()) cmd << " --skeleton " << skeleton;
    else cmd << " --gcos " << gcos_file << " --disp " << disp_file;
    if (budget.is_joint()) cmd << " --t " << budget.joint_t;
    else cmd << " --tx " << budget.tx << " --tz " << budget.tz;
    if (no_offset) cmd << " --no-offset";
    if (exhaustive) cmd << " --exhaustive --limit " << limit;
    cmd << " --emit " << emit;
    out.command = cmd.str();
    out.n = code.n();
    out.K = code.K();
    if (budget.is_joint()) out.d = 2 * budget.joint_t + 1;
    out.gcos = code.gcos();
    out.disp = code.displacement();
    for (const SignVector& sv : code.sign_gen()) out.signs.push_back(sv.to_hex());
    if (!code.offset().is_zero()) out.offset = code.offset().to_hex();
    record_text = serialize_record(out);
  }
  deliver(ctx, doc, text.str(), record_text);
  return kPass;
}

int cmd_search_displacements(Ctx& ctx, const std::string& check_src, int K,
                             int target_d2, std::uint64_t max_nodes,
                             const std::string& emit) {
  BinMatrix check = BinMatrix::empty(0);
  if (check_src.find('/') != std::string::npos || fs::exists(check_src)) {
    check = read_matrix_file(check_src);
  } else {
    RegistryRecord rec = resolve_record(ctx, check_src);
    if (rec.kind != "classical")
      throw cli_error("--check needs a classical record or a matrix file");
    check = to_linear(rec).check();
  }
  DisplacementSearchResult result =
      search_displacements(check, K, target_d2, max_nodes);

  json doc;
  doc["command"] = "search displacements";
  doc["n"] = check.n_cols();
  doc["K"] = K;
  doc["target_d2"] = target_d2;
  doc["nodes"] = result.nodes;
  doc["aborted"] = result.aborted;
  doc["found"] = result.code.has_value();

  std::ostringstream text;
  text << "check: " << check.n_rows() << " rows, n=" << check.n_cols()
       << "  K=" << K << "  target d2=" << target_d2 << "\n";
  text << "nodes: " << result.nodes << "\n";
  if (!result.code) {
    text << (result.aborted ? "aborted at node limit\n" : "") << "NO RESULT\n";
    deliver(ctx, doc, text.str());
    return kFail;
  }

  const PlusCode& p = *result.code;
  CodeParams params = verify_plus(p);
  doc["rows_chosen"] = result.rows_chosen;
  doc["disp"] = matrix_rows(p.displacement());
  doc["params"] = {{"n", params.n}, {"K", params.K}, {"d1", params.d1},
                   {"d2", params.d2}};
  text << "rows chosen:";
  for (int r : result.rows_chosen) text << " " << r;
  text << "\ndisp:\n";
  for (const std::string& row : matrix_rows(p.displacement()))
    text << "  " << row << "\n";
  text << "params: {" << params.n << "," << params.K << "} d1=" << params.d1
       << " d2=" << params.d2 << "\n";
  text << "FOUND\n";

  std::optional<std::string> record_text;
  if (!emit.empty()) {
    RegistryRecord out;
    out.name = emit;
    out.kind = "plus";
    out.source = "derived";
    std::ostringstream cmd;
    cmd << "qec search displacements --check " << check_src << " --K " << K
        << " --target-d2 " << target_d2 << " --emit " << emit;
    out.command = cmd.str();
    out.n = params.n;
    out.K = params.K;
    out.d1 = params.d1;
    out.d2 = params.d2;
    out.h1 = p.h1();
    out.disp = p.displacement();
    record_text = serialize_record(out);
  }
  deliver(ctx, doc, text.str(), record_text);
  return kPass;
}

// ---- make ----------------------------------------------------------------------

int cmd_make_cyclic(Ctx& ctx, const std::vector<int>& poly, int r, int n,
                    const std::string& emit) {
  if (poly.empty()) throw cli_error("--poly is required (e.g. --poly 0,1)");
  LinearCode c = make_cyclic(poly, r, n);
  std::optional<int> dist;
  if (c.k() >= 1 && c.k() <= LinearCode::kMaxSweepDimension)
    dist = c.min_distance();

  json doc;
  doc["command"] = "make cyclic";
  doc["poly_exponents"] = poly;
  doc["r"] = r;
  doc["n"] = n;
  doc["k"] = c.k();
  if (dist) doc["d"] = *dist;
  doc["check"] = matrix_rows(c.check());

  std::ostringstream text;
  text << "cyclic code: x^" << r << " =";
  for (std::size_t i = 0; i < poly.size(); ++i)
    text << (i ? " + x^" : " x^") << poly[i];
  text << ", n=" << n << " -> [" << n << "," << c.k() << ","
       << (dist ? std::to_string(*dist) : "?") << "]\n";
  text << "check:\n";
  for (const std::string& row : matrix_rows(c.check()))
    text << "  " << row << "\n";

  std::optional<std::string> record_text;
  if (!emit.empty()) {
    RegistryRecord out;
    out.name = emit;
    out.kind = "classical";
    out.source = "derived";
    std::ostringstream cmd;
    cmd << "qec make cyclic --poly ";
    for (std::size_t i = 0; i < poly.size(); ++i)
      cmd << (i ? "," : "") << poly[i];
    cmd << " --r " << r << " --n " << n << " --emit " << emit;
    out.command = cmd.str();
    out.n = n;
    out.k = c.k();
    out.d = dist;
    out.check = c.check();
    record_text = serialize_record(out);
  }
  deliver(ctx, doc, text.str(), record_text);
  return kPass;
}

int cmd_make_plus(Ctx& ctx, const std::string& from_wsd,
                  const std::string& emit) {
  if (from_wsd.empty()) throw cli_error("--from-wsd NAME is required");
  RegistryRecord rec = resolve_record(ctx, from_wsd);
  if (rec.kind != "classical")
    throw cli_error("--from-wsd needs a classical record");
  LinearCode c = to_linear(rec);
  PlusCode p = build_from_weakly_self_dual(c);
  CodeParams params = verify_plus(p);

  json doc;
  doc["command"] = "make plus";
  doc["from"] = rec.name;
  doc["n"] = params.n;
  doc["K"] = params.K;
  doc["d1"] = params.d1;
  doc["d2"] = params.d2;
  doc["self_dual"] = params.K == 0;

  std::ostringstream text;
  text << "source: " << rec.name << " [" << c.n() << "," << c.k()
       << "] weakly self-dual\n";
  if (params.K == 0)
    text << "self-dual: K=0, single code vector\n";
  text << "plus code: {" << params.n << "," << params.K << "," << params.d1
       << "}+  d1=" << params.d1 << " d2=" << params.d2 << "\n";
  text << "h1:\n";
  for (const std::string& row : matrix_rows(p.h1())) text << "  " << row << "\n";
  text << "disp:\n";
  for (const std::string& row : matrix_rows(p.displacement()))
    text << "  " << row << "\n";

  std::optional<std::string> record_text;
  if (!emit.empty()) {
    RegistryRecord out;
    out.name = emit;
    out.kind = "plus";
    out.source = "derived";
    out.command = "qec make plus --from-wsd " + from_wsd + " --emit " + emit;
    out.n = params.n;
    out.K = params.K;
    out.d1 = params.d1;
    out.d2 = params.d2;
    out.h1 = p.h1();
    if (params.K > 0) out.disp = p.displacement();
    record_text = serialize_record(out);
  }
  deliver(ctx, doc, text.str(), record_text);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  int rc = kPass;

  CLI::App app{"binary linear codes, {n,K,d1,d2}+ quantum codes, exact "
               "orthogonality verification, and sign-allocation search"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "structured output (one JSON document)");
  std::string data_dir_flag;
  app.add_option("--data-dir", data_dir_flag,
                 "data directory (registry/, distance_table.txt)")
      ->envname("QEC_DATA_DIR");
  int workers = 0;
  app.add_option("--workers", workers,
                 "worker threads for sweeps (default: QEC_WORKERS or 1)");

  // registry
  CLI::App* reg = app.add_subcommand("registry", "browse the code registry");
  reg->fallthrough();
  reg->require_subcommand(1);
  CLI::App* reg_list = reg->add_subcommand("list", "list all records");
  reg_list->fallthrough();
  std::string show_name;
  CLI::App* reg_show =
      reg->add_subcommand("show", "print one record in file form");
  reg_show->fallthrough();
  reg_show->add_option("name", show_name, "record name, alias, or file")
      ->required();

  // verify
  std::string verify_name;
  BudgetFlags verify_budget;
  bool classical_only = false;
  CLI::App* verify =
      app.add_subcommand("verify", "verify a record's distance/orthogonality "
                                   "claims");
  verify->fallthrough();
  verify->add_option("name", verify_name, "record name, alias, or file")
      ->required();
  verify->add_option("--t", verify_budget.t, "joint error budget");
  verify->add_option("--tx", verify_budget.tx, "bit-flip budget");
  verify->add_option("--tz", verify_budget.tz, "phase-flip budget");
  verify->add_flag("--classical-only", classical_only,
                   "skip the quantum orthogonality oracle");

  // expand
  std::string expand_name;
  CLI::App* expand =
      app.add_subcommand("expand", "write out a quantum code's state listing");
  expand->fallthrough();
  expand->add_option("name", expand_name, "record name, alias, or file")
      ->required();

  // table
  CLI::App* table = app.add_subcommand("table", "distance-table queries");
  table->fallthrough();
  table->require_subcommand(1);
  CLI::App* nmin = table->add_subcommand(
      "nmin", "smallest n for a dual pair with distances d, dperp");
  nmin->fallthrough();
  std::string dtable_flag;
  int nmin_d = -1, nmin_dperp = -1;
  nmin->add_option("--dtable", dtable_flag, "alternative distance-table file");
  nmin->add_option("--d", nmin_d, "distance d (with --dperp; else full grid)");
  nmin->add_option("--dperp", nmin_dperp, "dual distance");
  CLI::App* bound =
      table->add_subcommand("bound", "quantum sphere-packing bound");
  bound->fallthrough();
  std::vector<int> bound_K;
  int bound_t = 1, bound_n = -1;
  bound->add_option("--K", bound_K, "encoded qubits (repeatable or K1,K2,...)")
      ->delimiter(',')
      ->required();
  bound->add_option("--t", bound_t, "correctable errors (default 1)");
  bound->add_option("--n", bound_n, "check one n instead of finding n_min");

  // search
  CLI::App* search = app.add_subcommand("search", "sign and displacement "
                                                  "searches");
  search->fallthrough();
  search->require_subcommand(1);
  CLI::App* signs = search->add_subcommand(
      "signs", "find sign generators making errored states orthogonal");
  signs->fallthrough();
  std::string sk_name, gcos_file, disp_file, signs_emit;
  BudgetFlags signs_budget;
  bool no_offset = false, exhaustive = false;
  std::uint64_t signs_limit = 0;
  signs->add_option("--skeleton", sk_name,
                    "plus or signed record supplying gcos/disp");
  signs->add_option("--gcos", gcos_file, "coset-generator matrix file");
  signs->add_option("--disp", disp_file, "displacement matrix file");
  signs->add_option("--t", signs_budget.t, "joint budget (default 1)");
  signs->add_option("--tx", signs_budget.tx, "bit-flip budget");
  signs->add_option("--tz", signs_budget.tz, "phase-flip budget");
  signs->add_flag("--no-offset", no_offset, "fix the offset to zero");
  signs->add_flag("--exhaustive", exhaustive,
                  "leave the linear-sign-code space (needs --limit)");
  signs->add_option("--limit", signs_limit,
                    "candidate cap in exhaustive mode");
  signs->add_option("--emit", signs_emit,
                    "print the hit as a registry record named EMIT");
  CLI::App* disp = search->add_subcommand(
      "displacements", "choose displacement rows keeping d2 at target");
  disp->fallthrough();
  std::string check_src, disp_emit;
  int disp_K = 0, target_d2 = 3;
  std::uint64_t max_nodes = 200000;
  disp->add_option("--check", check_src,
                   "classical record or check-matrix file")
      ->required();
  disp->add_option("--K", disp_K, "number of displacement rows")->required();
  disp->add_option("--target-d2", target_d2, "minimum d2 (default 3)");
  disp->add_option("--max-nodes", max_nodes, "search node cap");
  disp->add_option("--emit", disp_emit,
                   "print the hit as a registry record named EMIT");

  // make
  CLI::App* make = app.add_subcommand("make", "construct catalog codes");
  make->fallthrough();
  make->require_subcommand(1);
  CLI::App* cyclic = make->add_subcommand(
      "cyclic", "cyclic code from a primitive polynomial");
  cyclic->fallthrough();
  std::vector<int> poly;
  int cyc_r = 0, cyc_n = 0;
  std::string cyc_emit;
  cyclic->add_option("--poly", poly,
                     "feedback exponents e with x^r = sum x^e (e.g. 0,1)")
      ->delimiter(',')
      ->required();
  cyclic->add_option("--r", cyc_r, "field degree")->required();
  cyclic->add_option("--n", cyc_n, "code length")->required();
  cyclic->add_option("--emit", cyc_emit,
                     "print the code as a registry record named EMIT");
  CLI::App* mkplus = make->add_subcommand(
      "plus", "plus code from a weakly-self-dual classical code");
  mkplus->fallthrough();
  std::string from_wsd, plus_emit;
  mkplus->add_option("--from-wsd", from_wsd, "classical record name or file")
      ->required();
  mkplus->add_option("--emit", plus_emit,
                     "print the code as a registry record named EMIT");

  auto leaf = [&](CLI::App* cmd, auto fn) {
    cmd->callback([&, fn]() {
      if (workers > 0) set_worker_count(workers);
      ctx.data_dir = !data_dir_flag.empty() ? fs::path(data_dir_flag)
                                            : fs::path(QEC_DEFAULT_DATA_DIR);
      rc = fn();
    });
  };
  leaf(reg_list, [&] { return cmd_registry_list(ctx); });
  leaf(reg_show, [&] { return cmd_registry_show(ctx, show_name); });
  leaf(verify, [&] {
    return cmd_verify(ctx, verify_name, verify_budget, classical_only);
  });
  leaf(expand, [&] { return cmd_expand(ctx, expand_name); });
  leaf(nmin, [&] { return cmd_table_nmin(ctx, dtable_flag, nmin_d, nmin_dperp); });
  leaf(bound, [&] { return cmd_table_bound(ctx, bound_K, bound_t, bound_n); });
  leaf(signs, [&] {
    return cmd_search_signs(ctx, sk_name, gcos_file, disp_file, signs_budget,
                            no_offset, exhaustive, signs_limit, signs_emit);
  });
  leaf(disp, [&] {
    return cmd_search_displacements(ctx, check_src, disp_K, target_d2,
                                    max_nodes, disp_emit);
  });
  leaf(cyclic, [&] { return cmd_make_cyclic(ctx, poly, cyc_r, cyc_n, cyc_emit); });
  leaf(mkplus, [&] { return cmd_make_plus(ctx, from_wsd, plus_emit); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  } catch (const cli_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
