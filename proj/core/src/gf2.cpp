#include "qec/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qec {

// ---------------------------------------------------------------------------
// BitWord

BitWord::BitWord(int length) {
  if (length < 0 || length > kMaxBits) {
    throw error("BitWord length out of range: " + std::to_string(length));
  }
  len_ = length;
}

BitWord BitWord::from_string(std::string_view s) {
  BitWord w(static_cast<int>(s.size()));
  for (int i = 0; i < w.len_; ++i) {
    char c = s[static_cast<std::size_t>(i)];
    if (c == '1') {
      w.set(i, true);
    } else if (c != '0') {
      throw format_error("invalid character in binary word: '" +
                         std::string(1, c) + "'");
    }
  }
  return w;
}

BitWord BitWord::ones(int length) {
  BitWord w(length);
  for (int i = 0; i < length; ++i) w.set(i, true);
  return w;
}

void BitWord::check_index(int i) const {
  if (i < 0 || i >= len_) {
    throw error("bit index " + std::to_string(i) + " out of range for word of length " +
                std::to_string(len_));
  }
}

bool BitWord::get(int i) const {
  check_index(i);
  return (limbs_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u;
}

void BitWord::set(int i, bool value) {
  check_index(i);
  std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    limbs_[static_cast<std::size_t>(i / 64)] |= mask;
  } else {
    limbs_[static_cast<std::size_t>(i / 64)] &= ~mask;
  }
}

void BitWord::flip(int i) {
  check_index(i);
  limbs_[static_cast<std::size_t>(i / 64)] ^= std::uint64_t{1} << (i % 64);
}

int BitWord::weight() const {
  return std::popcount(limbs_[0]) + std::popcount(limbs_[1]);
}

bool BitWord::is_zero() const { return limbs_[0] == 0 && limbs_[1] == 0; }

BitWord& BitWord::operator^=(const BitWord& other) {
  if (len_ != other.len_) throw error("length mismatch in word XOR");
  limbs_[0] ^= other.limbs_[0];
  limbs_[1] ^= other.limbs_[1];
  return *this;
}

BitWord BitWord::operator&(const BitWord& other) const {
  if (len_ != other.len_) throw error("length mismatch in word AND");
  BitWord r(len_);
  r.limbs_[0] = limbs_[0] & other.limbs_[0];
  r.limbs_[1] = limbs_[1] & other.limbs_[1];
  return r;
}

std::strong_ordering BitWord::operator<=>(const BitWord& other) const {
  if (auto c = len_ <=> other.len_; c != 0) return c;
  if (auto c = limbs_[0] <=> other.limbs_[0]; c != 0) return c;
  return limbs_[1] <=> other.limbs_[1];
}

std::string BitWord::to_string() const {
  std::string s(static_cast<std::size_t>(len_), '0');
  for (int i = 0; i < len_; ++i) {
    if (get(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool dot(const BitWord& a, const BitWord& b) {
  if (a.length() != b.length()) throw error("length mismatch in inner product");
  return (a & b).weight() % 2 != 0;
}

// ---------------------------------------------------------------------------
// BinMatrix

BinMatrix::BinMatrix(int n_rows, int n_cols) {
  if (n_rows < 0) throw error("negative row count");
  BitWord zero(n_cols);  // validates column count
  cols_ = n_cols;
  rows_.assign(static_cast<std::size_t>(n_rows), zero);
}

BinMatrix BinMatrix::empty(int n_cols) { return BinMatrix(0, n_cols); }

BinMatrix BinMatrix::identity(int n) {
  BinMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinMatrix BinMatrix::from_rows(std::vector<BitWord> rows) {
  BinMatrix m;
  if (rows.empty()) return m;
  m.cols_ = rows.front().length();
  for (const auto& r : rows) {
    if (r.length() != m.cols_) throw error("ragged rows in matrix");
  }
  m.rows_ = std::move(rows);
  return m;
}

BinMatrix BinMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitWord> words;
  words.reserve(rows.size());
  for (const auto& s : rows) words.push_back(BitWord::from_string(s));
  return from_rows(std::move(words));
}

BinMatrix BinMatrix::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  std::istringstream in{std::string(text)};
  while (std::getline(in, current)) {
    // strip trailing carriage return and surrounding spaces
    while (!current.empty() && (current.back() == '\r' || current.back() == ' ' ||
                                current.back() == '\t')) {
      current.pop_back();
    }
    std::size_t start = current.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::string trimmed = current.substr(start);
    if (trimmed[0] == '#') continue;
    lines.push_back(trimmed);
  }
  if (lines.empty()) throw format_error("matrix text contains no rows");
  return from_strings(lines);
}

const BitWord& BinMatrix::row(int i) const {
  if (i < 0 || i >= n_rows()) throw error("row index out of range");
  return rows_[static_cast<std::size_t>(i)];
}

BitWord& BinMatrix::row(int i) {
  if (i < 0 || i >= n_rows()) throw error("row index out of range");
  return rows_[static_cast<std::size_t>(i)];
}

void BinMatrix::append_row(const BitWord& w) {
  if (rows_.empty() && cols_ == 0) {
    cols_ = w.length();
  } else if (w.length() != cols_) {
    throw error("appended row has wrong length");
  }
  rows_.push_back(w);
}

BinMatrix BinMatrix::vstack(const BinMatrix& below) const {
  if (n_rows() > 0 && below.n_rows() > 0 && cols_ != below.cols_) {
    throw error("column mismatch in vstack");
  }
  BinMatrix out = *this;
  if (out.rows_.empty()) out.cols_ = std::max(cols_, below.cols_);
  for (const auto& r : below.rows_) out.append_row(r);
  return out;
}

std::string BinMatrix::to_text() const {
  std::string out;
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// In-place Gauss-Jordan with leftmost-pivot preference.  Returns the list of
// pivot columns (ascending); afterwards rows [0, pivots.size()) hold the
// reduced nonzero rows in pivot order and any remaining rows are zero.
std::vector<int> gauss_jordan(std::vector<BitWord>& rows, int n_cols) {
  std::vector<int> pivots;
  std::size_t next_row = 0;
  for (int col = 0; col < n_cols && next_row < rows.size(); ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < rows.size() && !rows[pivot_row].get(col)) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && rows[r].get(col)) rows[r] ^= rows[next_row];
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

BinMatrix rref(const BinMatrix& m) {
  std::vector<BitWord> rows = m.rows();
  std::vector<int> pivots = gauss_jordan(rows, m.n_cols());
  rows.resize(pivots.size());
  BinMatrix out = BinMatrix::from_rows(std::move(rows));
  if (out.n_rows() == 0) out = BinMatrix::empty(m.n_cols());
  return out;
}

int rank(const BinMatrix& m) {
  std::vector<BitWord> rows = m.rows();
  return static_cast<int>(gauss_jordan(rows, m.n_cols()).size());
}

bool rowspan_equal(const BinMatrix& a, const BinMatrix& b) {
  if (a.n_cols() != b.n_cols()) return false;
  return rref(a) == rref(b);
}

bool in_rowspan(const BinMatrix& m, const BitWord& w) {
  if (w.length() != m.n_cols()) throw error("word length does not match matrix");
  std::vector<BitWord> rows = m.rows();
  std::vector<int> pivots = gauss_jordan(rows, m.n_cols());
  BitWord residue = w;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (residue.get(pivots[i])) residue ^= rows[i];
  }
  return residue.is_zero();
}

BinMatrix null_space(const BinMatrix& m) {
  const int n = m.n_cols();
  std::vector<BitWord> rows = m.rows();
  std::vector<int> pivots = gauss_jordan(rows, n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  BinMatrix basis = BinMatrix::empty(n);
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    BitWord v(n);
    v.set(free_col, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free_col)) v.set(pivots[i], true);
    }
    basis.append_row(v);
  }
  return basis;
}

BinMatrix StandardForm::generator_original_coords() const {
  const int n = static_cast<int>(column_permutation.size());
  BinMatrix out = BinMatrix::empty(n);
  for (int i = 0; i < g.n_rows(); ++i) out.append_row(to_original_coords(g.row(i)));
  return out;
}

BitWord StandardForm::to_original_coords(const BitWord& w) const {
  const int n = static_cast<int>(column_permutation.size());
  if (w.length() != n) throw error("word length does not match permutation");
  BitWord out(n);
  for (int j = 0; j < n; ++j) {
    if (w.get(j)) out.set(column_permutation[static_cast<std::size_t>(j)], true);
  }
  return out;
}

StandardForm standard_form(const BinMatrix& h) {
  const int n = h.n_cols();
  const int m = h.n_rows();
  if (m > n) throw error("check matrix has more rows than columns");

  // Gauss-Jordan with RIGHTMOST-column pivot preference; each pivot goes to
  // the lowest-index row that still lacks one.  A matrix already in (A | I)
  // form is then left untouched with the identity permutation.
  std::vector<BitWord> rows = h.rows();
  std::vector<int> pivot_col_of_row(static_cast<std::size_t>(m), -1);
  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(n), -1);
  int found = 0;
  for (int col = n - 1; col >= 0 && found < m; --col) {
    int pr = -1;
    for (int r = 0; r < m; ++r) {
      if (pivot_col_of_row[static_cast<std::size_t>(r)] < 0 &&
          rows[static_cast<std::size_t>(r)].get(col)) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    for (int r = 0; r < m; ++r) {
      if (r != pr && rows[static_cast<std::size_t>(r)].get(col)) {
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(pr)];
      }
    }
    pivot_col_of_row[static_cast<std::size_t>(pr)] = col;
    pivot_row_of_col[static_cast<std::size_t>(col)] = pr;
    ++found;
  }
  if (found < m) throw error("standard_form requires a full-row-rank matrix");

  const int k = n - m;
  StandardForm sf;
  sf.column_permutation.reserve(static_cast<std::size_t>(n));
  for (int col = 0; col < n; ++col) {
    if (pivot_row_of_col[static_cast<std::size_t>(col)] < 0) {
      sf.column_permutation.push_back(col);
    }
  }
  // identity block: pivot columns ordered by their pivot row
  for (int r = 0; r < m; ++r) {
    sf.column_permutation.push_back(pivot_col_of_row[static_cast<std::size_t>(r)]);
  }

  sf.h = BinMatrix(m, n);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) {
      sf.h.set(r, j,
               rows[static_cast<std::size_t>(r)].get(
                   sf.column_permutation[static_cast<std::size_t>(j)]));
    }
  }
  // h = (A | I) with A the first k columns; g = (I | A^T).
  sf.g = BinMatrix(k, n);
  for (int i = 0; i < k; ++i) {
    sf.g.set(i, i, true);
    for (int r = 0; r < m; ++r) sf.g.set(i, k + r, sf.h.get(r, i));
  }
  return sf;
}

BinMatrix delete_row_and_pivot(const BinMatrix& m, int row_index) {
  std::vector<BitWord> rows = m.rows();
  std::vector<int> pivots = gauss_jordan(rows, m.n_cols());
  if (static_cast<int>(pivots.size()) != m.n_rows()) {
    throw error("delete_row_and_pivot requires a full-row-rank matrix");
  }
  if (row_index < 0 || row_index >= static_cast<int>(pivots.size())) {
    throw error("row index out of range in delete_row_and_pivot");
  }
  const int drop_col = pivots[static_cast<std::size_t>(row_index)];
  BinMatrix out = BinMatrix::empty(m.n_cols() - 1);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    if (r == row_index) continue;
    BitWord w(m.n_cols() - 1);
    int jj = 0;
    for (int j = 0; j < m.n_cols(); ++j) {
      if (j == drop_col) continue;
      if (rows[static_cast<std::size_t>(r)].get(j)) w.set(jj, true);
      ++jj;
    }
    out.append_row(w);
  }
  return out;
}

}  // namespace qec
