// Acceptance gate: eleven pass/fail criteria covering the full pipeline,
// one line each, timed.  Exits 0 only when every criterion holds.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qec/codes.hpp"
#include "qec/cssplus.hpp"
#include "qec/format.hpp"
#include "qec/gf2.hpp"
#include "qec/qstate.hpp"
#include "qec/registry.hpp"
#include "qec/search.hpp"

using namespace qec;
namespace fs = std::filesystem;

namespace {

const fs::path kData = fs::path(QEC_SOURCE_DATA_DIR);

const Registry& reg() {
  static Registry r = Registry::load_dir(kData / "registry");
  return r;
}

SignedCode named_signed(const std::string& name) {
  return to_signed(*reg().find(name));
}

PlusCode named_plus(const std::string& name) {
  return to_plus(*reg().find(name));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// stdout of a CLI invocation (the acceptance gate exercises the real
/// binary where output bytes are the criterion).
std::string run_cli(const std::string& args) {
  std::string cmd = std::string(QEC_CLI_PATH) + " --data-dir " +
                    kData.string() + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

bool oracle_clean(const SignedCode& code, const ErrorBudget& b) {
  OrthogonalityReport rep = verify_orthogonal(code, b);
  return rep.pass && rep.conflict_count == 0;
}

// ---- criteria -----------------------------------------------------------------

bool c1_five_qubit() {
  if (!oracle_clean(named_signed("laflamme-5-1-3"), ErrorBudget::joint(1)))
    return false;
  BoundReport bound = quantum_hamming_bound(5, 1, 1);
  return bound.satisfied && bound.perfect && bound.lhs == "32" &&
         bound.rhs == "32";
}

bool c2_eight_qubit_listing() {
  std::string golden = slurp(kData / "golden" / "steane-8-3-3.listing.txt");
  if (golden.empty()) return false;
  if (run_cli("expand steane-8-3-3") != golden) return false;
  return oracle_clean(named_signed("steane-8-3-3"), ErrorBudget::joint(1));
}

bool c3_ten_and_eleven() {
  return oracle_clean(named_signed("signed-10-4-3"), ErrorBudget::joint(1)) &&
         oracle_clean(named_signed("signed-11-5-3"), ErrorBudget::joint(1));
}

bool c4_ten_two() {
  PlusCode p = named_plus("plus-10-2-3");
  BinMatrix reference_h2 = BinMatrix::from_strings(
      {"1111001000", "0111100100", "1010010010", "1110110001"});
  if (!rowspan_equal(p.h2(), reference_h2)) return false;
  CodeParams params = verify_plus(p);
  if (params.d1 != 3 || params.d2 != 3) return false;
  return oracle_clean(SignedCode::all_plus(p), ErrorBudget::split(1, 1));
}

bool c5_mid_sizes() {
  for (const char* name : {"plus-12-3-3", "plus-13-5-3", "plus-14-6-3"}) {
    PlusCode p = named_plus(name);
    CodeParams params = verify_plus(p);
    if (params.d1 != 3 || params.d2 != 3) return false;
    if (!oracle_clean(SignedCode::all_plus(p), ErrorBudget::joint(1)))
      return false;
  }
  return true;
}

bool c6_large_classical_only() {
  // Beyond the exact-oracle caps: the classical verifier is the acceptor.
  for (const char* name : {"plus-17-7-3", "plus-20-9-3", "plus-27-16-3"}) {
    CodeParams params = verify_plus(named_plus(name));
    if (params.d1 != 3 || params.d2 != 3) return false;
  }
  return true;
}

bool c7_weakly_self_dual_pipeline() {
  PlusCode p7 = build_from_weakly_self_dual(to_linear(*reg().find("hamming-7")));
  CodeParams params7 = verify_plus(p7);
  if (p7.K() != 1 || params7.d1 != 3 || params7.d2 != 3) return false;
  if (!oracle_clean(SignedCode::all_plus(p7), ErrorBudget::joint(1)))
    return false;

  PlusCode p8 =
      build_from_weakly_self_dual(to_linear(*reg().find("ext-hamming-8")));
  if (p8.K() != 0) return false;  // self-dual detected

  PlusCode golay =
      build_from_weakly_self_dual(to_linear(*reg().find("golay-23-12-7")));
  CodeParams gparams = verify_plus(golay);
  return golay.K() == 1 && gparams.d1 == 7 && gparams.d2 == 7;
}

bool c8_nmin_column() {
  DistanceTable table = DistanceTable::load(kData / "distance_table.txt");
  const std::vector<std::pair<int, int>> expect = {
      {3, 6}, {5, 11}, {7, 14}, {9, 20}, {11, 23}, {13, 27}, {15, 30}};
  for (auto [dperp, n] : expect)
    if (n_min_bound(3, dperp, table) != n) return false;
  return n_min_bound(7, 7, table) == 22;
}

bool c9_bound_list() {
  const int expect[] = {5, 7, 8, 9, 10};
  for (int K = 1; K <= 5; ++K)
    if (min_n_for(K, 1) != expect[K - 1]) return false;
  return min_n_for(1, 2) == 10;
}

bool c10_sign_search() {
  const RegistryRecord* rec = reg().find("steane-8-3-3");
  SignSearchResult result =
      search_signs(*rec->gcos, *rec->disp, ErrorBudget::joint(1));
  constexpr std::uint64_t kCap = 2ull * 32 * 32 * 32 * 32;
  return result.code.has_value() && result.report.pass &&
         result.candidates_examined <= kCap && result.nodes_visited <= kCap;
}

bool c11_property_suites() {
  // Dual involution across the registry's classical codes.
  for (const RegistryRecord* r : reg().all()) {
    if (r->kind != "classical") continue;
    LinearCode c = to_linear(*r);
    LinearCode dd = c.dual().dual();
    if (!rowspan_equal(dd.generator(), c.generator())) return false;
    // check <-> generator round trip
    if (!rowspan_equal(LinearCode::from_check(c.check()).generator(),
                       c.generator()))
      return false;
  }
  // Pauli involution and error-invariant inner products on the 8-qubit code.
  SignedCode code = named_signed("steane-8-3-3");
  PauliOp y1{BitWord::from_string("10000000"),
             BitWord::from_string("10000000")};
  PauliOp x1z2{BitWord::from_string("10000000"),
               BitWord::from_string("01000000")};
  for (std::uint32_t b = 0; b < 8; ++b) {
    QuantumState s = code.expand(b);
    auto norm = static_cast<std::int64_t>(s.support_size());
    if (inner(apply_pauli(y1, apply_pauli(y1, s)), s) != -norm) return false;
    if (apply_pauli(x1z2, apply_pauli(x1z2, s)) != s) return false;
    for (std::uint32_t b2 = 0; b2 < 8; ++b2) {
      QuantumState s2 = code.expand(b2);
      if (inner(apply_pauli(x1z2, s), apply_pauli(x1z2, s2)) != inner(s, s2))
        return false;
    }
  }
  // Classical/quantum agreement on every registry plus code with n <= 14.
  for (const RegistryRecord* r : reg().all()) {
    if (r->kind != "plus" || r->n > 14) continue;
    PlusCode p = to_plus(*r);
    CodeParams params = verify_plus(p);
    if (!oracle_clean(SignedCode::all_plus(p),
                      ErrorBudget::joint(std::min(params.t1, params.t2))))
      return false;
  }
  // Mutation sweep: flipping any single matrix or sign bit of the 8-qubit
  // code must break t = 1 verification.
  const RegistryRecord* rec = reg().find("steane-8-3-3");
  auto fails = [](BinMatrix g, BinMatrix d, std::vector<SignVector> s) {
    try {
      return !verify_orthogonal(SignedCode(std::move(g), std::move(d),
                                           std::move(s), std::nullopt),
                                ErrorBudget::joint(1))
                  .pass;
    } catch (const error&) {
      return true;
    }
  };
  auto flip = [](const BinMatrix& m, std::size_t row, int col) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.n_rows(); ++i)
      rows.push_back(m.row(i).to_string());
    rows[row][col] = rows[row][col] == '0' ? '1' : '0';
    return BinMatrix::from_strings(rows);
  };
  std::vector<SignVector> signs;
  for (const std::string& hex : rec->signs)
    signs.push_back(SignVector::from_hex(hex, 16));
  int mutations = 0;
  for (std::size_t r = 0; r < rec->gcos->n_rows(); ++r)
    for (int c = 0; c < 8; ++c, ++mutations)
      if (!fails(flip(*rec->gcos, r, c), *rec->disp, signs)) return false;
  for (std::size_t r = 0; r < rec->disp->n_rows(); ++r)
    for (int c = 0; c < 8; ++c, ++mutations)
      if (!fails(*rec->gcos, flip(*rec->disp, r, c), signs)) return false;
  for (std::size_t r = 0; r < signs.size(); ++r)
    for (int m = 0; m < 16; ++m, ++mutations) {
      std::vector<SignVector> mutated = signs;
      mutated[r].flip(m);
      if (!fails(*rec->gcos, *rec->disp, mutated)) return false;
    }
  return mutations == 104;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<bool()> check;
  };
  const std::vector<Criterion> criteria = {
      {"{5,1,3}: oracle t=1 clean; packing bound met with equality",
       c1_five_qubit},
      {"{8,3,3}: CLI expansion matches the reference listing byte-for-byte; "
       "oracle t=1 clean",
       c2_eight_qubit_listing},
      {"{10,4,3} and {11,5,3}: oracle t=1 clean", c3_ten_and_eleven},
      {"{10,2,3}+: derived h2 spans the reference check rows; d1=d2=3; "
       "oracle (tx,tz)=(1,1) agrees",
       c4_ten_two},
      {"{12,3,3}+ {13,5,3}+ {14,6,3}+: d1=d2=3 and oracle t=1 agrees",
       c5_mid_sizes},
      {"{17,7,3}+ {20,9,3}+ {27,16,3}+: classical sweeps give d1=d2=3 "
       "(oracle beyond caps by design)",
       c6_large_classical_only},
      {"weakly-self-dual pipeline: [7,4,3]->{7,1,3}+ oracle-confirmed; "
       "[8,4,4] self-dual K=0; Golay->{23,1,7}+ d1=d2=7",
       c7_weakly_self_dual_pipeline},
      {"distance table: n_min d=3 column 6,11,14,20,23,27,30 and (7,7)->22",
       c8_nmin_column},
      {"packing bound: n_min(K=1..5, t=1) = 5,7,8,9,10; n_min(K=1,t=2) = 10",
       c9_bound_list},
      {"sign search re-derives a valid {8,3} allocation within the "
       "linear-code space, oracle-accepted",
       c10_sign_search},
      {"property suites: involutions, invariance, verifier agreement, "
       "104-bit mutation sweep",
       c11_property_suites},
  };

  bool all = true;
  double total = 0.0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].check();
    } catch (const std::exception& e) {
      std::cerr << "criterion " << i + 1 << " threw: " << e.what() << "\n";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    total += secs;
    all = all && ok;
    std::printf("[%2zu] %s  %s  [%.3f s]\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].label, secs);
  }
  std::printf("acceptance: %s (11 criteria, %.2f s total)\n",
              all ? "ALL PASS" : "FAILURES PRESENT", total);
  return all ? 0 : 1;
}
