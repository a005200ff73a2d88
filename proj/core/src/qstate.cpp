#include "qec/qstate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>

#include "qec/runtime.hpp"

namespace qec {

// ---------------------------------------------------------------------------
// SignVector

SignVector::SignVector(int length) {
  if (length < 0) throw error("negative sign-vector length");
  len_ = length;
  limbs_.assign(static_cast<std::size_t>((length + 63) / 64), 0);
}

void SignVector::check_index(int m) const {
  if (m < 0 || m >= len_) {
    throw error("sign index " + std::to_string(m) + " out of range for length " +
                std::to_string(len_));
  }
}

SignVector SignVector::from_hex(std::string_view hex, int length) {
  if (length % 4 != 0 || static_cast<int>(hex.size()) * 4 != length) {
    throw format_error("hex sign vector '" + std::string(hex) +
                       "' does not match length " + std::to_string(length));
  }
  SignVector v(length);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    char c = hex[d];
    int val;
    if (c >= '0' && c <= '9') {
      val = c - '0';
    } else if (c >= 'A' && c <= 'F') {
      val = c - 'A' + 10;
    } else if (c >= 'a' && c <= 'f') {
      val = c - 'a' + 10;
    } else {
      throw format_error("invalid hex digit in sign vector");
    }
    // leftmost digit holds the highest-indexed four bits
    int base = (static_cast<int>(hex.size()) - 1 - static_cast<int>(d)) * 4;
    for (int b = 0; b < 4; ++b) {
      if ((val >> b) & 1) v.set(base + b, true);
    }
  }
  return v;
}

SignVector SignVector::from_bit_string(std::string_view bits) {
  SignVector v(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c == '1') {
      v.set(static_cast<int>(bits.size() - 1 - i), true);
    } else if (c != '0') {
      throw format_error("invalid character in sign bit string");
    }
  }
  return v;
}

bool SignVector::get(int m) const {
  check_index(m);
  return (limbs_[static_cast<std::size_t>(m / 64)] >> (m % 64)) & 1u;
}

void SignVector::set(int m, bool v) {
  check_index(m);
  std::uint64_t mask = std::uint64_t{1} << (m % 64);
  if (v) {
    limbs_[static_cast<std::size_t>(m / 64)] |= mask;
  } else {
    limbs_[static_cast<std::size_t>(m / 64)] &= ~mask;
  }
}

void SignVector::flip(int m) {
  check_index(m);
  limbs_[static_cast<std::size_t>(m / 64)] ^= std::uint64_t{1} << (m % 64);
}

bool SignVector::is_zero() const {
  return std::all_of(limbs_.begin(), limbs_.end(),
                     [](std::uint64_t l) { return l == 0; });
}

int SignVector::weight() const {
  int w = 0;
  for (std::uint64_t l : limbs_) w += std::popcount(l);
  return w;
}

SignVector& SignVector::operator^=(const SignVector& other) {
  if (len_ != other.len_) throw error("length mismatch in sign-vector XOR");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
  return *this;
}

std::strong_ordering SignVector::operator<=>(const SignVector& other) const {
  if (auto c = len_ <=> other.len_; c != 0) return c;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (auto c = limbs_[i] <=> other.limbs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string SignVector::to_hex() const {
  if (len_ % 4 != 0) throw error("sign-vector length not a multiple of 4");
  std::string out(static_cast<std::size_t>(len_ / 4), '0');
  static constexpr char kDigits[] = "0123456789ABCDEF";
  for (int d = 0; d < len_ / 4; ++d) {
    int base = (len_ / 4 - 1 - d) * 4;
    int val = 0;
    for (int b = 0; b < 4; ++b) {
      if (get(base + b)) val |= 1 << b;
    }
    out[static_cast<std::size_t>(d)] = kDigits[val];
  }
  return out;
}

std::string SignVector::to_bit_string() const {
  std::string out(static_cast<std::size_t>(len_), '0');
  for (int m = 0; m < len_; ++m) {
    if (get(m)) out[static_cast<std::size_t>(len_ - 1 - m)] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// PauliOp

PauliOp PauliOp::identity(int n) { return PauliOp{BitWord(n), BitWord(n)}; }

int PauliOp::weight() const {
  int w = 0;
  for (int q = 0; q < n(); ++q) {
    if (x_mask.get(q) || z_mask.get(q)) ++w;
  }
  return w;
}

std::string PauliOp::label() const {
  std::string out;
  for (int q = 0; q < n(); ++q) {
    bool x = x_mask.get(q), z = z_mask.get(q);
    if (!x && !z) continue;
    if (!out.empty()) out += ' ';
    out += x ? (z ? 'Y' : 'X') : 'Z';
    out += std::to_string(q + 1);
  }
  return out.empty() ? "I" : out;
}

// ---------------------------------------------------------------------------
// QuantumState

QuantumState QuantumState::from_terms(std::vector<Term> terms, int n) {
  std::erase_if(terms, [](const Term& t) { return t.amplitude == 0; });
  for (const Term& t : terms) {
    if (t.word.length() != n) throw error("state term has wrong word length");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.word < b.word; });
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].word == terms[i - 1].word) {
      throw error("duplicate word in state expansion");
    }
  }
  QuantumState s;
  s.terms_ = std::move(terms);
  s.n_ = n;
  return s;
}

const BitWord& QuantumState::min_word() const {
  if (terms_.empty()) throw error("empty state has no support");
  return terms_.front().word;
}

QuantumState apply_pauli(const PauliOp& op, const QuantumState& s) {
  if (op.n() != s.n()) throw error("operator size does not match state");
  std::vector<QuantumState::Term> terms;
  terms.reserve(s.terms().size());
  for (const auto& t : s.terms()) {
    // Sign from Z-mask parity on the ORIGINAL word, then X-mask flips bits.
    std::int64_t amp = dot(t.word, op.z_mask) ? -t.amplitude : t.amplitude;
    terms.push_back({t.word ^ op.x_mask, amp});
  }
  return QuantumState::from_terms(std::move(terms), s.n());
}

std::int64_t inner(const QuantumState& a, const QuantumState& b) {
  if (a.n() != b.n()) throw error("inner product of mismatched states");
  std::int64_t sum = 0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    auto cmp = ia->word <=> ib->word;
    if (cmp < 0) {
      ++ia;
    } else if (cmp > 0) {
      ++ib;
    } else {
      sum += ia->amplitude * ib->amplitude;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// SignedCode

SignedCode::SignedCode(BinMatrix gcos, BinMatrix displacement,
                       std::vector<SignVector> sign_gen,
                       std::optional<SignVector> offset)
    : gcos_(std::move(gcos)), d_(std::move(displacement)),
      sign_gen_(std::move(sign_gen)) {
  if (gcos_.n_rows() > 20) {
    throw dimension_error("coset generator too large (2^" +
                          std::to_string(gcos_.n_rows()) + " words per vector)");
  }
  if (d_.n_rows() > 0 && d_.n_cols() != gcos_.n_cols()) {
    throw error("displacement width does not match coset generator");
  }
  if (static_cast<int>(sign_gen_.size()) != d_.n_rows()) {
    throw error("need exactly one sign generator per displacement row");
  }
  BinMatrix stack = gcos_.vstack(d_);
  if (rank(stack) != stack.n_rows()) {
    throw error("coset generator and displacement rows must be independent");
  }
  const int width = w();
  for (const auto& sv : sign_gen_) {
    if (sv.length() != width) {
      throw error("sign generator length must be 2^(coset generator rows)");
    }
  }
  if (offset) {
    if (offset->length() != width) throw error("sign offset has wrong length");
    offset_ = std::move(*offset);
  } else {
    offset_ = SignVector(width);
  }
}

SignedCode SignedCode::all_plus(const PlusCode& p) {
  std::vector<SignVector> zeros(static_cast<std::size_t>(p.K()),
                                SignVector(1 << p.h2().n_rows()));
  return SignedCode(p.h2(), p.displacement(), std::move(zeros));
}

BitWord SignedCode::word_at(std::uint32_t b, std::uint32_t m) const {
  if (b >> K()) throw error("code vector index out of range");
  if (m >> r()) throw error("word index out of range");
  BitWord word(n());
  for (int i = 0; i < K(); ++i) {
    if ((b >> i) & 1u) word ^= d_.row(i);
  }
  for (int i = 0; i < r(); ++i) {
    if ((m >> i) & 1u) word ^= gcos_.row(i);
  }
  return word;
}

SignVector SignedCode::sign_vector(std::uint32_t b) const {
  if (b >> K()) throw error("code vector index out of range");
  SignVector sv = offset_;
  for (int i = 0; i < K(); ++i) {
    if ((b >> i) & 1u) sv ^= sign_gen_[static_cast<std::size_t>(i)];
  }
  return sv;
}

QuantumState SignedCode::expand(std::uint32_t b) const {
  SignVector sv = sign_vector(b);
  std::vector<QuantumState::Term> terms;
  terms.reserve(static_cast<std::size_t>(w()));
  // Gray-code walk over m: one row XOR per step.
  BitWord cur = word_at(b, 0);
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(w()); ++i) {
    if (i != 0) cur ^= gcos_.row(std::countr_zero(i));
    std::uint32_t m = i ^ (i >> 1);
    terms.push_back({cur, sv.get(static_cast<int>(m)) ? -1 : 1});
  }
  return QuantumState::from_terms(std::move(terms), n());
}

// ---------------------------------------------------------------------------
// Error enumeration

ErrorBudget ErrorBudget::joint(int t) {
  if (t < 0) throw error("negative error budget");
  ErrorBudget b;
  b.joint_t = t;
  return b;
}

ErrorBudget ErrorBudget::split(int tx, int tz) {
  if (tx < 0 || tz < 0) throw error("negative error budget");
  ErrorBudget b;
  b.tx = tx;
  b.tz = tz;
  return b;
}

namespace {

BitWord mask_to_word(std::uint32_t mask, int n) {
  BitWord w(n);
  while (mask) {
    int q = std::countr_zero(mask);
    w.set(q, true);
    mask &= mask - 1;
  }
  return w;
}

// All n-bit masks of the given weight, ascending.
std::vector<std::uint32_t> masks_of_weight(int n, int weight) {
  std::vector<std::uint32_t> out;
  if (weight == 0) {
    out.push_back(0);
    return out;
  }
  if (weight > n) return out;
  std::uint32_t v = (std::uint32_t{1} << weight) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (v < limit) {
    out.push_back(v);
    // Gosper's hack: next integer with the same popcount.
    std::uint32_t c = v & -v;
    std::uint32_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

std::vector<PauliOp> enumerate_errors(int n, const ErrorBudget& budget) {
  if (n < 1 || n > 24) throw dimension_error("error enumeration capped at n <= 24");
  std::vector<PauliOp> errors;
  if (budget.is_joint()) {
    // By weight, then support mask ascending, then base-3 assignment with the
    // lowest set qubit as the least significant digit (X=0, Y=1, Z=2).
    for (int s = 0; s <= std::min(budget.joint_t, n); ++s) {
      for (std::uint32_t mask : masks_of_weight(n, s)) {
        std::vector<int> qubits;
        for (std::uint32_t m2 = mask; m2;) {
          qubits.push_back(std::countr_zero(m2));
          m2 &= m2 - 1;
        }
        std::uint64_t count = 1;
        for (int i = 0; i < s; ++i) count *= 3;
        for (std::uint64_t a = 0; a < count; ++a) {
          PauliOp op = PauliOp::identity(n);
          std::uint64_t digits = a;
          for (int q : qubits) {
            switch (digits % 3) {
              case 0: op.x_mask.set(q, true); break;
              case 1: op.x_mask.set(q, true); op.z_mask.set(q, true); break;
              case 2: op.z_mask.set(q, true); break;
            }
            digits /= 3;
          }
          errors.push_back(std::move(op));
        }
      }
    }
  } else {
    // By x-weight then x-mask ascending; within, z-weight then z-mask.
    for (int wx = 0; wx <= std::min(budget.tx, n); ++wx) {
      for (std::uint32_t xm : masks_of_weight(n, wx)) {
        for (int wz = 0; wz <= std::min(budget.tz, n); ++wz) {
          for (std::uint32_t zm : masks_of_weight(n, wz)) {
            errors.push_back(PauliOp{mask_to_word(xm, n), mask_to_word(zm, n)});
          }
        }
      }
    }
  }
  return errors;
}

// ---------------------------------------------------------------------------
// Orthogonality oracle

namespace {

struct BoundedConflicts {
  // Keeps the conflicts with the 8 smallest (i, j) pairs plus a total count.
  static constexpr std::size_t kKeep = 8;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::int64_t>> kept;
  std::uint64_t total = 0;

  void add(std::uint64_t i, std::uint64_t j, std::int64_t value) {
    ++total;
    kept.emplace_back(i, j, value);
    if (kept.size() > 2 * kKeep) shrink();
  }
  void shrink() {
    std::sort(kept.begin(), kept.end());
    if (kept.size() > kKeep) kept.resize(kKeep);
  }
};

}  // namespace

OrthogonalityReport verify_orthogonal(const SignedCode& code,
                                      const ErrorBudget& budget) {
  if (code.n() > 16) {
    throw dimension_error("orthogonality oracle capped at n <= 16 (got n = " +
                          std::to_string(code.n()) +
                          "); use classical distance verification instead");
  }
  if (code.K() > 8) {
    throw dimension_error("orthogonality oracle capped at K <= 8");
  }

  const std::vector<PauliOp> errors = enumerate_errors(code.n(), budget);
  const std::uint64_t num_errors = errors.size();
  const std::uint64_t num_vectors = std::uint64_t{1} << code.K();
  const std::uint64_t num_states = num_vectors * num_errors;
  if (num_states * static_cast<std::uint64_t>(code.w()) > (std::uint64_t{1} << 26)) {
    throw dimension_error("orthogonality oracle: state volume too large");
  }

  // State index = b * num_errors + error index.
  std::vector<QuantumState> states;
  states.reserve(num_states);
  for (std::uint32_t b = 0; b < num_vectors; ++b) {
    QuantumState base = code.expand(b);
    for (const PauliOp& e : errors) {
      states.push_back(apply_pauli(e, base));
    }
  }

  // Supports are cosets of rowspan(gcos): equal or disjoint.  States in
  // different buckets have inner product 0 with nothing to compute.
  std::map<BitWord, std::vector<std::uint64_t>> buckets;
  for (std::uint64_t idx = 0; idx < num_states; ++idx) {
    buckets[states[idx].min_word()].push_back(idx);
  }
  std::vector<const std::vector<std::uint64_t>*> bucket_list;
  bucket_list.reserve(buckets.size());
  for (const auto& [word, members] : buckets) bucket_list.push_back(&members);

  const int workers =
      std::max(1, std::min<int>(worker_count(),
                                static_cast<int>(bucket_list.size())));
  std::vector<BoundedConflicts> partial(static_cast<std::size_t>(workers));

  auto sweep = [&](int tid) {
    BoundedConflicts& out = partial[static_cast<std::size_t>(tid)];
    for (std::size_t bi = static_cast<std::size_t>(tid); bi < bucket_list.size();
         bi += static_cast<std::size_t>(workers)) {
      const auto& members = *bucket_list[bi];
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b2 = a + 1; b2 < members.size(); ++b2) {
          std::int64_t v = inner(states[members[a]], states[members[b2]]);
          if (v != 0) out.add(members[a], members[b2], v);
        }
      }
    }
  };
  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) threads.emplace_back(sweep, t);
    for (auto& th : threads) th.join();
  }

  OrthogonalityReport report;
  report.pair_count = num_states * (num_states - 1) / 2;
  BoundedConflicts merged;
  for (auto& p : partial) {
    merged.total += p.total;
    p.shrink();
    merged.kept.insert(merged.kept.end(), p.kept.begin(), p.kept.end());
  }
  merged.shrink();
  report.conflict_count = merged.total;
  report.pass = merged.total == 0;
  for (const auto& [i, j, value] : merged.kept) {
    Conflict c;
    c.b1 = static_cast<std::uint32_t>(i / num_errors);
    c.e1 = errors[static_cast<std::size_t>(i % num_errors)];
    c.b2 = static_cast<std::uint32_t>(j / num_errors);
    c.e2 = errors[static_cast<std::size_t>(j % num_errors)];
    c.inner_value = value;
    report.first_conflicts.push_back(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Quantum sphere-packing bound

namespace {

using u128 = unsigned __int128;

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > static_cast<u128>(-1) / a) {
    throw error("bound computation overflow");
  }
  return a * b;
}

u128 checked_add(u128 a, u128 b) {
  if (b > static_cast<u128>(-1) - a) throw error("bound computation overflow");
  return a + b;
}

std::string decimal(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

BoundReport quantum_hamming_bound(int n, int K, int t) {
  if (n < 0 || n > 126 || K < 0 || t < 0) {
    throw error("quantum_hamming_bound: arguments out of range");
  }
  u128 lhs = 0;
  u128 binom = 1;  // C(n, i)
  u128 pow3 = 1;   // 3^i
  for (int i = 0; i <= std::min(t, n); ++i) {
    if (i > 0) {
      binom = checked_mul(binom, static_cast<u128>(n - i + 1)) /
              static_cast<u128>(i);
      pow3 = checked_mul(pow3, 3);
    }
    lhs = checked_add(lhs, checked_mul(binom, pow3));
  }
  if (K > 126) throw error("bound computation overflow");
  lhs = checked_mul(lhs, u128{1} << K);
  const u128 rhs = u128{1} << n;

  BoundReport r;
  r.satisfied = lhs <= rhs;
  r.perfect = lhs == rhs;
  r.lhs = decimal(lhs);
  r.rhs = decimal(rhs);
  return r;
}

int min_n_for(int K, int t) {
  for (int n = 1; n <= 300; ++n) {
    if (n > 126) throw error("min_n_for: no answer within range");
    if (quantum_hamming_bound(n, K, t).satisfied) return n;
  }
  throw error("min_n_for: no answer within range");
}

}  // namespace qec
