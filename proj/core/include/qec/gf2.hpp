#pragma once

// Dense GF(2) linear algebra on short binary words (up to 128 bits).
//
// Conventions used throughout the library:
//   * A word of length n is printed as n characters of '0'/'1'.  Printed
//     position 1 is the LEFTMOST character; the C++ API indexes the same
//     bit as index 0.  All public APIs are 0-based, human-facing output
//     is 1-based.
//   * Matrices are small (<= 128 columns, row count bounded only by memory)
//     and stored row-major as packed words.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qec {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed a hard dimensional cap.
class dimension_error : public error {
 public:
  using error::error;
};

/// Raised on malformed textual input (words, matrices, records, tables).
class format_error : public error {
 public:
  using error::error;
};

/// A fixed-capacity binary word: up to 128 bits, bit 0 = leftmost printed
/// character.  Equality and ordering compare length first, then bits; the
/// ordering is a deterministic total order used for canonical sorting.
class BitWord {
 public:
  static constexpr int kMaxBits = 128;

  BitWord() = default;
  /// Zero word of the given length (0 <= length <= 128).
  explicit BitWord(int length);

  /// Parse from '0'/'1' characters, length = string length.
  static BitWord from_string(std::string_view s);
  /// All-ones word.
  static BitWord ones(int length);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(int i) const;
  void set(int i, bool value);
  void flip(int i);

  /// Number of 1 bits.
  int weight() const;
  bool is_zero() const;

  BitWord& operator^=(const BitWord& other);
  friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
  BitWord operator&(const BitWord& other) const;

  bool operator==(const BitWord& other) const = default;
  std::strong_ordering operator<=>(const BitWord& other) const;

  std::string to_string() const;

 private:
  // limb 0 holds bits 0..63 (bit i at limb i/64, bit position i%64).
  std::array<std::uint64_t, 2> limbs_{0, 0};
  int len_ = 0;

  void check_index(int i) const;
};

/// GF(2) inner product: parity of the AND of two equal-length words.
/// Returns true for odd overlap.
bool dot(const BitWord& a, const BitWord& b);

/// A binary matrix stored as a list of equal-length rows.  Zero-row
/// matrices are legal and keep an explicit column count.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(int n_rows, int n_cols);
  /// Zero-row matrix with a column count.
  static BinMatrix empty(int n_cols);
  static BinMatrix identity(int n);
  static BinMatrix from_rows(std::vector<BitWord> rows);
  static BinMatrix from_strings(const std::vector<std::string>& rows);
  /// Parse the text form: one '0'/'1' row per line.  Blank lines and lines
  /// starting with '#' are ignored.  Throws format_error on anything else
  /// or on ragged rows.
  static BinMatrix parse(std::string_view text);

  int n_rows() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return cols_; }

  const BitWord& row(int i) const;
  BitWord& row(int i);
  bool get(int i, int j) const { return row(i).get(j); }
  void set(int i, int j, bool v) { row(i).set(j, v); }

  void append_row(const BitWord& w);
  /// Rows of this matrix followed by rows of `below` (column counts must match).
  BinMatrix vstack(const BinMatrix& below) const;

  const std::vector<BitWord>& rows() const { return rows_; }

  bool operator==(const BinMatrix& other) const = default;

  /// One '0'/'1' row per line, each line terminated by '\n'.
  std::string to_text() const;

 private:
  std::vector<BitWord> rows_;
  int cols_ = 0;
};

/// Reduced row echelon form with zero rows removed: the canonical basis of
/// the row span.  Two matrices have equal row spans iff their rref is equal.
BinMatrix rref(const BinMatrix& m);

int rank(const BinMatrix& m);

bool rowspan_equal(const BinMatrix& a, const BinMatrix& b);

/// True if `w` is a GF(2) combination of the rows of `m`.
bool in_rowspan(const BinMatrix& m, const BitWord& w);

/// Canonical full-rank basis of {x : m.x = 0}; (n - rank) rows, n columns.
BinMatrix null_space(const BinMatrix& m);

/// Result of standard_form(): a column permutation pi with
/// h[:, pi] = (A | I), and the generator g = (I | A^T) in permuted
/// coordinates.  column_permutation[j] = original column index placed at
/// permuted position j.
struct StandardForm {
  BinMatrix h;       ///< row-reduced h in permuted coordinates, equal to (A | I)
  BinMatrix g;       ///< (I | A^T) in permuted coordinates, k x n, full rank
  std::vector<int> column_permutation;

  /// g with columns mapped back to original coordinates.  Rows span the
  /// null space of the original matrix.
  BinMatrix generator_original_coords() const;
  /// Map a word from permuted coordinates back to original coordinates.
  BitWord to_original_coords(const BitWord& w) const;
};

/// Put a full-row-rank check matrix into (A | I) form by column permutation
/// (plus row reduction) and derive the matching generator (I | A^T).
/// Pivoting prefers rightmost columns, so a matrix already in (A | I) form
/// returns the identity permutation and is left unchanged.
/// Throws qec::error if h does not have full row rank.
StandardForm standard_form(const BinMatrix& h);

/// Row-reduce `m` (must have full row rank), then delete row `row_index` of
/// the reduced matrix together with that row's pivot column.  The result has
/// one row and one column fewer and again full row rank.
BinMatrix delete_row_and_pivot(const BinMatrix& m, int row_index);

}  // namespace qec
