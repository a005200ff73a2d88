#include "qec/codes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "qec/runtime.hpp"

namespace qec {

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(BinMatrix g, BinMatrix h)
    : generator_(std::move(g)), check_(std::move(h)) {}

LinearCode LinearCode::from_generator(BinMatrix g) {
  if (rank(g) != g.n_rows()) {
    throw error("generator matrix does not have full row rank");
  }
  BinMatrix h = null_space(g);
  return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::from_check(BinMatrix h) {
  if (rank(h) != h.n_rows()) {
    throw error("check matrix does not have full row rank");
  }
  BinMatrix g = null_space(h);
  return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::dual() const { return LinearCode(check_, generator_); }

int LinearCode::min_distance() const {
  if (cached_distance_) return *cached_distance_;
  if (k() == 0) throw error("zero-dimensional code has no nonzero codeword");
  cached_distance_ = min_weight_in_coset(generator_, BitWord(n()), -1);
  return *cached_distance_;
}

// ---------------------------------------------------------------------------
// Gray-code coset sweep

namespace {

// Atomically lower `best` to `candidate` if smaller; returns the new value.
int atomic_min(std::atomic<int>& best, int candidate) {
  int cur = best.load(std::memory_order_relaxed);
  while (candidate < cur &&
         !best.compare_exchange_weak(cur, candidate, std::memory_order_relaxed)) {
  }
  return std::min(cur, candidate);
}

// Sweep counter values [begin, end) of the Gray-code walk, updating `best`.
void sweep_block(const BinMatrix& basis, const BitWord& shift, bool skip_zero,
                 int early_stop, std::uint64_t begin, std::uint64_t end,
                 std::atomic<int>& best) {
  // Word for counter i is shift XOR the rows selected by gray(i) = i ^ (i >> 1);
  // consecutive counters differ in exactly one row (bit countr_zero(i)).
  BitWord cur = shift;
  std::uint64_t g = begin ^ (begin >> 1);
  for (int b = 0; b < basis.n_rows(); ++b) {
    if ((g >> b) & 1u) cur ^= basis.row(b);
  }
  int local_best = std::numeric_limits<int>::max();
  for (std::uint64_t i = begin; i < end; ++i) {
    if (i != begin) cur ^= basis.row(std::countr_zero(i));
    if (!(i == 0 && skip_zero)) {
      int w = cur.weight();
      if (w < local_best) {
        local_best = w;
        int global = atomic_min(best, w);
        if (early_stop >= 0 && global <= early_stop) return;
      }
    }
    if (early_stop >= 0 && (i & 0x3FF) == 0 &&
        best.load(std::memory_order_relaxed) <= early_stop) {
      return;
    }
  }
}

}  // namespace

int min_weight_in_coset(const BinMatrix& basis, const BitWord& shift,
                        int early_stop) {
  if (shift.length() != basis.n_cols() && basis.n_rows() > 0) {
    throw error("shift length does not match basis");
  }
  const int kdim = basis.n_rows();
  if (kdim > LinearCode::kMaxSweepDimension) {
    throw dimension_error(
        "coset weight sweep capped at dimension " +
        std::to_string(LinearCode::kMaxSweepDimension) + " (got " +
        std::to_string(kdim) +
        "); use an early-exit floor on a smaller sub-question instead");
  }
  const std::uint64_t total = std::uint64_t{1} << kdim;
  const bool skip_zero = shift.is_zero();
  if (total == 1 && skip_zero) return std::numeric_limits<int>::max();

  std::atomic<int> best{std::numeric_limits<int>::max()};
  int workers = worker_count();
  if (total < 4096 || workers <= 1) {
    sweep_block(basis, shift, skip_zero, early_stop, 0, total, best);
  } else {
    workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
    for (int t = 0; t < workers; ++t) {
      std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
      std::uint64_t end = (t == workers - 1) ? total : begin + chunk;
      threads.emplace_back(sweep_block, std::cref(basis), std::cref(shift),
                           skip_zero, early_stop, begin, end, std::ref(best));
    }
    for (auto& th : threads) th.join();
  }
  return best.load();
}

// ---------------------------------------------------------------------------
// Construction catalog

LinearCode make_repetition(int n) {
  if (n < 1) throw error("repetition code needs n >= 1");
  BinMatrix g = BinMatrix::empty(n);
  g.append_row(BitWord::ones(n));
  return LinearCode::from_generator(g);
}

LinearCode make_even_weight(int n) {
  if (n < 2) throw error("even-weight code needs n >= 2");
  BinMatrix h = BinMatrix::empty(n);
  h.append_row(BitWord::ones(n));
  return LinearCode::from_check(h);
}

LinearCode make_hamming(int r) {
  if (r < 2) throw error("Hamming code needs r >= 2");
  const int n = (1 << r) - 1;
  BinMatrix h(r, n);
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < r; ++i) {
      if ((j >> i) & 1) h.set(i, j - 1, true);
    }
  }
  return LinearCode::from_check(h);
}

LinearCode make_extended_hamming(int r) {
  if (r < 2) throw error("extended Hamming code needs r >= 2");
  const int n = 1 << r;
  BinMatrix h(r + 1, n);
  h.row(0) = BitWord::ones(n);
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < r; ++i) {
      if ((j >> i) & 1) h.set(i + 1, j - 1, true);
    }
  }
  return LinearCode::from_check(h);
}

LinearCode make_reed_muller1(int m) {
  if (m < 1) throw error("first-order Reed-Muller code needs m >= 1");
  const int n = 1 << m;
  BinMatrix g(m + 1, n);
  g.row(0) = BitWord::ones(n);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < m; ++i) {
      if ((v >> i) & 1) g.set(i + 1, v, true);
    }
  }
  return LinearCode::from_generator(g);
}

LinearCode make_golay() {
  // Generator polynomial x^11 + x^9 + x^7 + x^6 + x^5 + x + 1; generator row
  // i carries its coefficients (degree 11 leftmost) shifted to columns
  // i..i+11, so the rows form a full-rank staircase spanning the cyclic code.
  static constexpr int kCoeffDegrees[] = {11, 9, 7, 6, 5, 1, 0};
  const int n = 23;
  const int k = 12;
  BinMatrix g(k, n);
  for (int i = 0; i < k; ++i) {
    for (int d : kCoeffDegrees) g.set(i, i + (11 - d), true);
  }
  return LinearCode::from_generator(g);
}

BinMatrix make_cyclic_check(const std::vector<int>& feedback_exponents, int r,
                            int n) {
  if (r < 1 || r > 30) throw error("cyclic check: r out of range");
  if (n < r || n > (1 << r) - 1) {
    throw error("cyclic check needs r <= n <= 2^r - 1");
  }
  std::uint32_t feedback = 0;
  for (int e : feedback_exponents) {
    if (e < 0 || e >= r) throw error("cyclic check: feedback exponent out of range");
    feedback |= std::uint32_t{1} << e;
  }
  const std::uint32_t mask = (std::uint32_t{1} << r) - 1;
  const std::uint32_t order = mask;  // required multiplicative order of alpha

  // Verify primitivity: alpha = x must have period exactly 2^r - 1 under
  // multiplication modulo the feedback polynomial.
  std::uint32_t v = 1;
  std::uint32_t period = 0;
  do {
    v <<= 1;
    if (v >> r) v = (v & mask) ^ feedback;
    ++period;
    if (period > order) break;
  } while (v != 1);
  if (period != order) {
    throw error("cyclic check: feedback polynomial is not primitive (period " +
                std::to_string(period) + ", need " + std::to_string(order) + ")");
  }

  // Column j (0 = rightmost printed position) holds alpha^j, written with the
  // alpha^(r-1) coefficient in the top row.
  BinMatrix h(r, n);
  v = 1;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < r; ++i) {
      if ((v >> (r - 1 - i)) & 1u) h.set(i, n - 1 - j, true);
    }
    v <<= 1;
    if (v >> r) v = (v & mask) ^ feedback;
  }
  return h;
}

LinearCode make_cyclic(const std::vector<int>& feedback_exponents, int r, int n) {
  return LinearCode::from_check(make_cyclic_check(feedback_exponents, r, n));
}

// ---------------------------------------------------------------------------
// Predicates and operations

bool is_weakly_self_dual(const LinearCode& c) {
  const BinMatrix& h = c.check();
  for (int i = 0; i < h.n_rows(); ++i) {
    for (int j = i; j < h.n_rows(); ++j) {
      if (dot(h.row(i), h.row(j))) return false;
    }
  }
  return true;
}

LinearCode combine(const LinearCode& base, const LinearCode& ext,
                   const std::vector<int>& row_assignment) {
  if (static_cast<int>(row_assignment.size()) != ext.k()) {
    throw error("combine: need one target check row per extension generator row");
  }
  std::set<int> seen;
  for (int r : row_assignment) {
    if (r < 0 || r >= base.check().n_rows()) {
      throw error("combine: target check row out of range");
    }
    if (!seen.insert(r).second) throw error("combine: duplicate target check row");
  }

  const int nb = base.n();
  const int ne = ext.n();
  BinMatrix h = BinMatrix::empty(nb + ne);
  for (int r = 0; r < base.check().n_rows(); ++r) {
    BitWord w(nb + ne);
    for (int j = 0; j < nb; ++j) {
      if (base.check().get(r, j)) w.set(j, true);
    }
    for (int i = 0; i < ext.k(); ++i) {
      if (row_assignment[static_cast<std::size_t>(i)] == r) {
        for (int j = 0; j < ne; ++j) {
          if (ext.generator().get(i, j)) w.set(nb + j, true);
        }
      }
    }
    h.append_row(w);
  }
  for (int r = 0; r < ext.check().n_rows(); ++r) {
    BitWord w(nb + ne);
    for (int j = 0; j < ne; ++j) {
      if (ext.check().get(r, j)) w.set(nb + j, true);
    }
    h.append_row(w);
  }
  return LinearCode::from_check(h);
}

// ---------------------------------------------------------------------------
// DistanceTable

DistanceTable DistanceTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw error("cannot open distance table: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

DistanceTable DistanceTable::parse(std::string_view text) {
  DistanceTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    int n, k, lo, hi;
    if (!(fields >> n)) continue;  // blank or comment-only line
    if (!(fields >> k >> lo >> hi)) {
      throw format_error("distance table line " + std::to_string(lineno) +
                         ": expected 'n k d_lower d_upper'");
    }
    std::string extra;
    if (fields >> extra) {
      throw format_error("distance table line " + std::to_string(lineno) +
                         ": trailing fields");
    }
    if (n < 1 || k < 0 || k > n || lo < 1 || lo > hi || hi > n) {
      throw format_error("distance table line " + std::to_string(lineno) +
                         ": values out of range");
    }
    if (!t.entries_.emplace(std::pair{n, k}, std::pair{lo, hi}).second) {
      throw format_error("distance table line " + std::to_string(lineno) +
                         ": duplicate (n, k) entry");
    }
    t.max_n_ = std::max(t.max_n_, n);
  }
  // d_upper must be non-increasing in k for fixed n.
  for (const auto& [key, val] : t.entries_) {
    auto next = t.entries_.find({key.first, key.second + 1});
    if (next != t.entries_.end() && next->second.second > val.second) {
      throw format_error("distance table not monotone at n=" +
                         std::to_string(key.first) +
                         ", k=" + std::to_string(key.second));
    }
  }
  return t;
}

std::optional<std::pair<int, int>> DistanceTable::lookup(int n, int k) const {
  auto it = entries_.find({n, k});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

int n_min_bound(int d, int d_perp, const DistanceTable& table) {
  if (d < 1 || d_perp < 1) throw error("n_min_bound: distances must be >= 1");
  for (int n = 2; n <= table.max_n(); ++n) {
    for (int k = 1; k < n; ++k) {
      auto a = table.lookup(n, k);
      auto b = table.lookup(n, n - k);
      if (a && b && a->second >= d && b->second >= d_perp) return n;
    }
  }
  throw error("distance table coverage exhausted before finding n for d=" +
              std::to_string(d) + ", d_perp=" + std::to_string(d_perp));
}

}  // namespace qec
