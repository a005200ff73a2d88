#pragma once

// Exact integer quantum-state algebra for sign-allocated code vectors, and
// the orthogonality oracle that decides whether a candidate code corrects a
// given error budget.
//
// A code vector indexed by b (0 <= b < 2^K) is the superposition of the
// w = 2^r words { D(b) XOR gcos(m) : 0 <= m < w }, where D(b) is the XOR of
// the displacement rows selected by the bits of b and gcos(m) the XOR of the
// coset-generator rows selected by the bits of m, each with amplitude +1 or
// -1 given by bit m of the vector's sign vector.  All amplitudes are exact
// integers; no floating point is involved anywhere.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qec/cssplus.hpp"
#include "qec/gf2.hpp"

namespace qec {

/// A dynamic bit vector holding one sign per word index m.  Bit m = 0 is
/// the RIGHTMOST character of the printed form (least significant hex
/// digit), opposite to BitWord's convention.  Bit value 1 means amplitude -1.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int length);

  /// Parse from hex digits; length must be a multiple of 4 matching the
  /// digit count * 4.
  static SignVector from_hex(std::string_view hex, int length);
  /// Parse from '0'/'1' characters, leftmost = highest index.
  static SignVector from_bit_string(std::string_view bits);

  int length() const { return len_; }
  bool get(int m) const;
  void set(int m, bool v);
  void flip(int m);
  bool is_zero() const;
  int weight() const;

  SignVector& operator^=(const SignVector& other);
  friend SignVector operator^(SignVector a, const SignVector& b) { return a ^= b; }

  bool operator==(const SignVector&) const = default;
  std::strong_ordering operator<=>(const SignVector& other) const;

  /// Uppercase hex, length/4 digits; throws unless length % 4 == 0.
  std::string to_hex() const;
  std::string to_bit_string() const;

 private:
  std::vector<std::uint64_t> limbs_;
  int len_ = 0;
  void check_index(int m) const;
};

/// An n-qubit Pauli operator up to global phase, as a pair of masks:
/// x_mask flips amplitudes (X), z_mask flips signs (Z); a qubit set in both
/// acts as Y (with the global factor of i dropped — irrelevant to
/// orthogonality).  Qubit q (0-based) corresponds to printed position q+1.
struct PauliOp {
  BitWord x_mask;
  BitWord z_mask;

  static PauliOp identity(int n);

  int n() const { return x_mask.length(); }
  bool is_identity() const { return x_mask.is_zero() && z_mask.is_zero(); }
  /// Number of qubits acted on (popcount of x OR z).
  int weight() const;
  int x_weight() const { return x_mask.weight(); }
  int z_weight() const { return z_mask.weight(); }

  /// Human-readable form, e.g. "I", "X1", "Y2 Z5" (1-based positions).
  std::string label() const;

  bool operator==(const PauliOp&) const = default;
};

/// A sparse integer-amplitude state: terms sorted by word, amplitudes
/// nonzero.  Amplitudes are not normalized; orthogonality questions only
/// need exact integer inner products.
class QuantumState {
 public:
  struct Term {
    BitWord word;
    std::int64_t amplitude;
    bool operator==(const Term&) const = default;
  };

  QuantumState() = default;
  /// Build from terms; sorts by word, drops zero amplitudes, throws
  /// qec::error on duplicate words (the expansion never produces any).
  static QuantumState from_terms(std::vector<Term> terms, int n);

  int n() const { return n_; }
  std::size_t support_size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Smallest word of the support (requires nonempty support).
  const BitWord& min_word() const;

  bool operator==(const QuantumState&) const = default;

 private:
  std::vector<Term> terms_;
  int n_ = 0;
};

/// Apply a Pauli operator: each term's sign picks up (-1)^(popcount of
/// word AND z_mask) evaluated on the ORIGINAL word, then the word is XORed
/// with x_mask.
QuantumState apply_pauli(const PauliOp& op, const QuantumState& s);

/// Exact integer inner product <a|b> (real by construction).
std::int64_t inner(const QuantumState& a, const QuantumState& b);

/// A sign-allocated code: coset generators, displacements, and one sign
/// vector per displacement index plus an optional global offset.  The sign
/// vector of code vector b is the XOR of sign_gen rows selected by the bits
/// of b, XOR the offset.
class SignedCode {
 public:
  /// Validates: gcos stacked on displacement has independent rows (so the 2^K
  /// expansions have no duplicate words and distinct vectors have distinct
  /// supports or signs); sign_gen has exactly K vectors of length w = 2^r;
  /// offset, when present, has length w.
  SignedCode(BinMatrix gcos, BinMatrix displacement,
             std::vector<SignVector> sign_gen,
             std::optional<SignVector> offset = std::nullopt);

  /// Embed a plus code with all signs positive: gcos = p.h2(), displacement
  /// = p.displacement(), all sign generators and the offset zero.
  static SignedCode all_plus(const PlusCode& p);

  int n() const { return gcos_.n_cols(); }
  int K() const { return static_cast<int>(sign_gen_.size()); }
  /// Number of coset-generator rows r; w = 2^r words per code vector.
  int r() const { return gcos_.n_rows(); }
  int w() const { return 1 << r(); }

  const BinMatrix& gcos() const { return gcos_; }
  const BinMatrix& displacement() const { return d_; }
  const std::vector<SignVector>& sign_gen() const { return sign_gen_; }
  const SignVector& offset() const { return offset_; }

  /// Word m of code vector b: XOR of displacement rows per bits of b and
  /// gcos rows per bits of m (bit i selects row i).
  BitWord word_at(std::uint32_t b, std::uint32_t m) const;
  /// Sign vector of code vector b: XOR of sign_gen rows per bits of b, XOR
  /// the offset.
  SignVector sign_vector(std::uint32_t b) const;
  /// The full w-term state of code vector b (amplitudes +1/-1).
  QuantumState expand(std::uint32_t b) const;

 private:
  BinMatrix gcos_;
  BinMatrix d_;
  std::vector<SignVector> sign_gen_;
  SignVector offset_;
};

/// Error budget for the orthogonality oracle: either a joint budget
/// (weight(x OR z) <= t) or a split budget (weight(x) <= tx AND
/// weight(z) <= tz).  The identity is always included.
struct ErrorBudget {
  static ErrorBudget joint(int t);
  static ErrorBudget split(int tx, int tz);

  bool is_joint() const { return joint_t >= 0; }
  int joint_t = -1;
  int tx = 0;
  int tz = 0;
};

/// All Pauli errors within the budget, deterministically ordered.  Joint
/// budget: by total weight, then by support mask (ascending), then by the
/// base-3 assignment (X < Y < Z, lowest qubit least significant).  Split
/// budget: x_mask ascending (grouped by weight), z_mask ascending within.
std::vector<PauliOp> enumerate_errors(int n, const ErrorBudget& budget);

/// One failed orthogonality pair: (code vector b1 hit by e1) not orthogonal
/// to (code vector b2 hit by e2).
struct Conflict {
  std::uint32_t b1 = 0;
  PauliOp e1;
  std::uint32_t b2 = 0;
  PauliOp e2;
  std::int64_t inner_value = 0;
};

struct OrthogonalityReport {
  bool pass = false;
  /// Distinct unordered pairs of errored states = S(S-1)/2 with
  /// S = 2^K * (number of errors).
  std::uint64_t pair_count = 0;
  std::uint64_t conflict_count = 0;
  /// First conflicts in the canonical pair order, at most 8.
  std::vector<Conflict> first_conflicts;
};

/// Decide whether all distinct errored code vectors are mutually orthogonal:
/// for every pair (b, e) != (b', e') within the budget, the inner product of
/// e|v_b> and e'|v_b'> must vanish.  Exact integer arithmetic throughout.
/// Capped at n <= 16 and K <= 8 (throws dimension_error beyond).  The pair
/// sweep is split across worker_count() threads with deterministic results.
OrthogonalityReport verify_orthogonal(const SignedCode& code,
                                      const ErrorBudget& budget);

// ---- quantum sphere-packing bound -------------------------------------------

/// Exact bound report: lhs = 2^K * sum_{i<=t} 3^i * C(n, i), rhs = 2^n,
/// computed in 128-bit arithmetic and rendered in decimal.
struct BoundReport {
  bool satisfied = false;
  bool perfect = false;  ///< lhs == rhs
  std::string lhs;
  std::string rhs;
};

/// Requires 0 <= n <= 126, K >= 0, t >= 0 (and K <= n for satisfiability).
BoundReport quantum_hamming_bound(int n, int K, int t);

/// Smallest n satisfying the bound for the given K and t.
int min_n_for(int K, int t);

}  // namespace qec
