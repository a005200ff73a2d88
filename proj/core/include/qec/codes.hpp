#pragma once

// Classical binary linear codes: construction catalog, exact minimum
// distance by exhaustive enumeration, duality, code combination, and the
// distance-bound table used to answer "smallest n with given d and dual d".

#include <filesystem>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qec/gf2.hpp"

namespace qec {

/// An [n, k] binary linear code held as a full-rank generator matrix plus
/// the matching full-rank check matrix (each the null-space basis of the
/// other).  k = 0 and k = n are legal edge cases (zero-row matrices).
class LinearCode {
 public:
  /// Hard cap on the exhaustive minimum-distance sweep (2^k codewords).
  static constexpr int kMaxSweepDimension = 24;

  static LinearCode from_generator(BinMatrix g);
  static LinearCode from_check(BinMatrix h);

  int n() const { return generator_.n_cols(); }
  int k() const { return generator_.n_rows(); }

  const BinMatrix& generator() const { return generator_; }
  const BinMatrix& check() const { return check_; }

  /// The dual code: generator and check matrices swap roles.
  LinearCode dual() const;

  /// Exact minimum weight of a nonzero codeword, by Gray-code enumeration
  /// of all 2^k - 1 of them.  Cached after the first call.  Throws
  /// dimension_error when k exceeds kMaxSweepDimension (use
  /// min_weight_in_coset with an early-exit floor for bounded questions),
  /// and qec::error when k = 0 (no nonzero codewords).
  int min_distance() const;

  bool operator==(const LinearCode& other) const {
    return generator_ == other.generator_ && check_ == other.check_;
  }

 private:
  LinearCode(BinMatrix g, BinMatrix h);
  BinMatrix generator_;
  BinMatrix check_;
  mutable std::optional<int> cached_distance_;
};

/// Minimum weight over {shift + c : c in rowspan(basis)}.  When `shift` is
/// zero the zero word itself is skipped (so the result is the minimum
/// nonzero weight of the row span).  Stops early and returns the running
/// minimum as soon as it is <= early_stop (pass -1 to disable).  Subject to
/// the same 2^rows <= 2^24 cap as min_distance.  The sweep is split across
/// worker_count() threads.
int min_weight_in_coset(const BinMatrix& basis, const BitWord& shift,
                        int early_stop = -1);

// ---- construction catalog --------------------------------------------------

/// [n, 1, n] repetition code.
LinearCode make_repetition(int n);
/// [n, n-1, 2] even-weight code.
LinearCode make_even_weight(int n);
/// [2^r - 1, 2^r - 1 - r, 3] Hamming code; check column j (1-based from the
/// left) is the binary expansion of j, least significant bit in the top row.
LinearCode make_hamming(int r);
/// [2^r, 2^r - 1 - r, 4] extended Hamming code; check row 0 is all ones and
/// check row i (1 <= i <= r), column j holds bit i-1 of j (the 2^r-th
/// column wraps to 0).
LinearCode make_extended_hamming(int r);
/// [2^m, m + 1, 2^(m-1)] first-order Reed-Muller code.
LinearCode make_reed_muller1(int m);
/// [23, 12, 7] binary Golay code (cyclic form).
LinearCode make_golay();

/// Check matrix of the cyclic code of length n whose roots are powers of a
/// primitive element of GF(2^r): column j (j = 0 at the RIGHTMOST printed
/// position) is alpha^j written top-down from the alpha^(r-1) coefficient.
/// `feedback_exponents` lists the exponents e with x^r = sum x^e (e.g. {0,1}
/// for x^4 = 1 + x).  Throws qec::error when the polynomial is not
/// primitive.  Requires r <= n <= 2^r - 1 (n = r gives the k = 0 code).
BinMatrix make_cyclic_check(const std::vector<int>& feedback_exponents, int r,
                            int n);
/// The [n, n-r] code with the above check matrix.
LinearCode make_cyclic(const std::vector<int>& feedback_exponents, int r, int n);

// ---- predicates and operations ---------------------------------------------

/// True iff the dual is contained in the code, i.e. every pair of check
/// rows (including a row with itself) has even overlap.
bool is_weakly_self_dual(const LinearCode& c);

/// Graft a second code onto selected check rows: the result has
/// n = base.n + ext.n; check row r of the base is extended by ext generator
/// row i where row_assignment[i] = r (other check rows extended by zeros),
/// and every ext *check* row, left-padded with zeros, is appended as a new
/// check row.  Requires ext.k == row_assignment.size() and distinct targets.
LinearCode combine(const LinearCode& base, const LinearCode& ext,
                   const std::vector<int>& row_assignment);

// ---- distance-bound table ----------------------------------------------------

/// Table of per-(n, k) minimum-distance bounds loaded from a data file with
/// lines "n k d_lower d_upper" ('#' comments allowed).  Validates
/// 1 <= d_lower <= d_upper <= n and that for fixed n, d_upper is
/// non-increasing in k wherever consecutive entries exist.
class DistanceTable {
 public:
  static DistanceTable load(const std::filesystem::path& file);
  static DistanceTable parse(std::string_view text);

  /// (d_lower, d_upper) for an [n, k] code, if tabulated.
  std::optional<std::pair<int, int>> lookup(int n, int k) const;
  int max_n() const { return max_n_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<int, int>, std::pair<int, int>> entries_;
  int max_n_ = 0;
};

/// Smallest n for which some k in [1, n-1] allows both an [n, k] code of
/// distance >= d and an [n, n-k] code of distance >= d_perp, judging
/// possibility by the table's d_upper entries.  Throws qec::error mentioning
/// "coverage" when the table runs out before an answer is found.
int n_min_bound(int d, int d_perp, const DistanceTable& table);

}  // namespace qec
