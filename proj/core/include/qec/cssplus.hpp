#pragma once

// Quantum codes of the {n, K, d1, d2}+ family, built from a pair of nested
// classical codes: C1 = null(h1) and C2 = rowspan(h1 stacked on D), with
// the dual of C2 contained in C1.  The K displacement rows of D label 2^K
// cosets of the dual of C2 inside C1; each coset carries one code vector.
// d1 protects amplitude (bit-flip) errors via C1, d2 protects phase errors
// via C2.

#include <optional>

#include "qec/codes.hpp"
#include "qec/gf2.hpp"

namespace qec {

/// Verified parameters of a plus code.  t1/t2 are the correctable error
/// counts floor((d-1)/2).
struct CodeParams {
  int n = 0;
  int K = 0;
  int d1 = 0;
  int d2 = 0;
  int t1 = 0;
  int t2 = 0;

  bool operator==(const CodeParams&) const = default;
};

/// An {n, K}+ code: base check matrix h1 (full rank), displacement matrix D
/// (K rows of C1, distinct modulo the dual of C2), and the derived
/// generator h2 of that dual.
class PlusCode {
 public:
  int n() const { return h1_.n_cols(); }
  int K() const { return d_.n_rows(); }

  const BinMatrix& h1() const { return h1_; }
  const BinMatrix& displacement() const { return d_; }
  /// Generator of the dual of C2 (n - rank(h1 ++ D) rows, full rank).
  const BinMatrix& h2() const { return h2_; }
  /// h1 stacked on D: the generator of C2.
  BinMatrix stack() const { return h1_.vstack(d_); }

  /// The classical code C1 = null(h1).
  LinearCode c1() const { return LinearCode::from_check(h1_); }
  /// The classical code C2 = rowspan(h1 ++ D).
  LinearCode c2() const { return LinearCode::from_generator(rref(stack())); }

  /// True when this instance was produced by build_from_weakly_self_dual
  /// (or reduce_kk1), i.e. C2 equals C1 and d1 = d2 exactly.
  bool from_weakly_self_dual() const { return from_wsd_; }

  friend PlusCode build_from_h1_d(BinMatrix h1, BinMatrix displacement);
  friend PlusCode build_from_weakly_self_dual(const LinearCode& c);

 private:
  PlusCode() = default;
  BinMatrix h1_;
  BinMatrix d_;
  BinMatrix h2_;
  bool from_wsd_ = false;
};

/// Build from explicit h1 and displacement rows.  Validates: h1 full rank;
/// every displacement row passes the h1 checks (lies in C1); the stacked
/// matrix has rank rank(h1) + K (cosets distinct).  Throws qec::error
/// naming the offending row otherwise.
PlusCode build_from_h1_d(BinMatrix h1, BinMatrix displacement);

/// Build from a weakly-self-dual classical [n, k, d] code (dual contained in
/// the code): h1 = its check matrix, K = 2k - n, displacement rows chosen
/// greedily as the first generator rows independent of the dual.  The result
/// is an {n, 2k-n, d}+ code with d1 = d2 = d.
PlusCode build_from_weakly_self_dual(const LinearCode& c);

/// Exact d1 = min distance of C1 and d2 = min distance of C2, by exhaustive
/// sweep (subject to the k <= 24 cap).  For a weakly-self-dual build the two
/// sweeps coincide and are run once.
CodeParams verify_plus(const PlusCode& p);

/// From an {n, K}+ code built from a weakly-self-dual [n, k, d] code, derive
/// the {n-1, K+1, >= d-1}+ code: delete check row `check_row` of the reduced
/// h1 together with its pivot column, then rebuild from the shortened
/// (still weakly-self-dual) classical code.  Precondition:
/// p.from_weakly_self_dual().
PlusCode reduce_kk1(const PlusCode& p, int check_row = 0);

/// Upper bound on K for a distance-3 plus code of length n:
/// n - 2*ceil(log2(n + 1)).  May be negative (no such code).
int hamming_k_bound(int n);

}  // namespace qec
