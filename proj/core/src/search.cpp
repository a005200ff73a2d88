#include "qec/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace qec {

namespace {

// Single candidate sign vector: index 2a + c -> bit m = <a, m> XOR c.
SignVector hadamard_candidate(int w, std::uint64_t index) {
  SignVector v(w);
  const std::uint32_t a = static_cast<std::uint32_t>(index >> 1);
  const bool comp = index & 1;
  for (int m = 0; m < w; ++m) {
    bool bit = (std::popcount(a & static_cast<std::uint32_t>(m)) % 2) != 0;
    v.set(m, bit ^ comp);
  }
  return v;
}

// Sign vector from the bits of an integer (exhaustive mode).
SignVector signs_from_value(int w, std::uint64_t value) {
  SignVector v(w);
  for (int m = 0; m < w && m < 64; ++m) {
    if ((value >> m) & 1u) v.set(m, true);
  }
  return v;
}

// Expansion of one code vector directly from its pieces (no SignedCode
// validation overhead): words shift XOR gcos(m), amplitude from signs.
QuantumState expand_with(const BinMatrix& gcos, const BitWord& shift,
                         const SignVector& signs) {
  const std::uint32_t w = std::uint32_t{1} << gcos.n_rows();
  std::vector<QuantumState::Term> terms;
  terms.reserve(w);
  BitWord cur = shift;
  for (std::uint32_t i = 0; i < w; ++i) {
    if (i != 0) cur ^= gcos.row(std::countr_zero(i));
    std::uint32_t m = i ^ (i >> 1);
    terms.push_back({cur, signs.get(static_cast<int>(m)) ? -1 : 1});
  }
  return QuantumState::from_terms(std::move(terms), gcos.n_cols());
}

std::vector<QuantumState> errored(const QuantumState& base,
                                  const std::vector<PauliOp>& errors) {
  std::vector<QuantumState> out;
  out.reserve(errors.size());
  for (const PauliOp& e : errors) out.push_back(apply_pauli(e, base));
  return out;
}

// True iff every distinct pair across (or within, when b == nullptr) the
// lists has inner product zero.  Support cosets are equal-or-disjoint, so
// only min-word matches need computing.
bool lists_orthogonal(const std::vector<QuantumState>& a,
                      const std::vector<QuantumState>* b) {
  std::map<BitWord, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < a.size(); ++i) {
    index[a[i].min_word()].push_back(i);
  }
  if (b == nullptr) {
    for (const auto& [word, members] : index) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (inner(a[members[i]], a[members[j]]) != 0) return false;
        }
      }
    }
    return true;
  }
  for (const QuantumState& s : *b) {
    auto it = index.find(s.min_word());
    if (it == index.end()) continue;
    for (std::size_t i : it->second) {
      if (inner(a[i], s) != 0) return false;
    }
  }
  return true;
}

struct SignSearchContext {
  const BinMatrix& gcos;
  const BinMatrix& displacement;
  const std::vector<PauliOp>& errors;
  int w;
  int K;
  // Errored expansions of vector 0 with zero signs.
  std::vector<QuantumState> base_states;
  // Pair-check memo keyed by delta * w + hadamard index.
  std::unordered_map<std::uint64_t, bool> memo;

  BitWord shift_of(std::uint32_t delta) const {
    BitWord s(gcos.n_cols());
    for (int i = 0; i < K; ++i) {
      if ((delta >> i) & 1u) s ^= displacement.row(i);
    }
    return s;
  }

  // Exact-oracle pair check for vectors 0 and delta with the relative
  // Hadamard index A.  Complement bits and affine offsets multiply every
  // term of the decision sums by a global sign, so this one check covers
  // every pair (b, b XOR delta) under every complement/offset choice.
  bool pair_ok(std::uint32_t delta, std::uint32_t a_index) {
    std::uint64_t key = static_cast<std::uint64_t>(delta) *
                            static_cast<std::uint64_t>(w) +
                        a_index;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QuantumState v = expand_with(
        gcos, shift_of(delta),
        hadamard_candidate(w, static_cast<std::uint64_t>(a_index) << 1));
    std::vector<QuantumState> other = errored(v, errors);
    bool ok = lists_orthogonal(base_states, &other);
    memo.emplace(key, ok);
    return ok;
  }
};

}  // namespace

std::vector<SignVector> hadamard_candidates(int w) {
  if (w < 1 || (w & (w - 1)) != 0) {
    throw error("hadamard_candidates: w must be a power of two");
  }
  if (w > 4096) {
    throw dimension_error("hadamard_candidates capped at w <= 4096");
  }
  std::vector<SignVector> out;
  out.reserve(static_cast<std::size_t>(2 * w));
  for (int idx = 0; idx < 2 * w; ++idx) {
    out.push_back(hadamard_candidate(w, static_cast<std::uint64_t>(idx)));
  }
  return out;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > static_cast<std::uint64_t>(-1) / base) {
      throw error("candidate space size overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

SignSearchResult run_exhaustive(const BinMatrix& gcos,
                                const BinMatrix& displacement,
                                const ErrorBudget& budget,
                                const SignSearchOptions& options) {
  const int r = gcos.n_rows();
  const int w = 1 << r;
  const int K = displacement.n_rows();
  if (w > 32) {
    throw dimension_error("exhaustive sign search capped at w <= 32");
  }
  const std::uint64_t per_slot = std::uint64_t{1} << w;
  const int slots = K + (options.allow_offset ? 1 : 0);

  SignSearchResult result;
  result.space_size = pow_u64(per_slot, slots);

  // Mixed-radix odometer, offset (when present) in the fastest position.
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(slots), 0);
  bool done = slots == 0;
  bool first = true;
  while (true) {
    if (!first && done) break;
    if (!first) {
      // increment, offset digit fastest
      int pos = slots - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == per_slot) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    first = false;
    if (slots == 0 && result.candidates_examined > 0) break;

    ++result.candidates_examined;
    ++result.nodes_visited;
    std::vector<SignVector> rows;
    rows.reserve(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) {
      rows.push_back(signs_from_value(w, digits[static_cast<std::size_t>(i)]));
    }
    std::optional<SignVector> offset;
    if (options.allow_offset) {
      offset = signs_from_value(w, digits[static_cast<std::size_t>(K)]);
    }
    SignedCode candidate(gcos, displacement, std::move(rows), std::move(offset));
    OrthogonalityReport report = verify_orthogonal(candidate, budget);
    if (report.pass) {
      result.code = std::move(candidate);
      result.report = std::move(report);
      return result;
    }
    if (options.candidate_limit > 0 &&
        result.candidates_examined >= options.candidate_limit) {
      result.aborted = true;
      return result;
    }
  }
  return result;
}

}  // namespace

SignSearchResult search_signs(const BinMatrix& gcos,
                              const BinMatrix& displacement,
                              const ErrorBudget& budget,
                              const SignSearchOptions& options) {
  if (gcos.n_cols() > 16) {
    throw dimension_error("sign search capped at n <= 16");
  }
  if (displacement.n_rows() > 8) {
    throw dimension_error("sign search capped at K <= 8");
  }
  // Shape validation (independence etc.) via a throwaway skeleton build.
  const int K = displacement.n_rows();
  const int w = 1 << gcos.n_rows();
  SignedCode skeleton(gcos, displacement,
                      std::vector<SignVector>(static_cast<std::size_t>(K),
                                              SignVector(w)));

  if (options.exhaustive) {
    if (options.candidate_limit == 0) {
      throw error("exhaustive sign search requires an explicit candidate limit");
    }
    return run_exhaustive(gcos, displacement, budget, options);
  }

  SignSearchResult result;
  const std::uint64_t per_slot = 2 * static_cast<std::uint64_t>(w);
  result.space_size =
      pow_u64(per_slot, K + (options.allow_offset ? 1 : 0));

  std::vector<PauliOp> errors = enumerate_errors(gcos.n_cols(), budget);
  SignSearchContext ctx{gcos, displacement, errors, w, K, {}, {}};
  ctx.base_states = errored(expand_with(gcos, BitWord(gcos.n_cols()),
                                        SignVector(w)),
                            errors);

  // Single-vector checks (error pairs on one code vector) are independent
  // of the code-vector index and of every affine sign choice, so one
  // skeleton check decides them for the whole space.
  if (options.prune && !lists_orthogonal(ctx.base_states, nullptr)) {
    return result;
  }

  std::vector<std::uint64_t> choice(static_cast<std::size_t>(K), 0);
  std::vector<std::uint32_t> a_of_row(static_cast<std::size_t>(K), 0);

  // Depth-first over rows, candidate index ascending, offset innermost.
  auto try_leaf = [&]() -> bool {
    const std::uint64_t offset_count = options.allow_offset ? per_slot : 1;
    for (std::uint64_t oi = 0; oi < offset_count; ++oi) {
      ++result.candidates_examined;
      std::vector<SignVector> rows;
      rows.reserve(static_cast<std::size_t>(K));
      for (int i = 0; i < K; ++i) {
        rows.push_back(hadamard_candidate(w, choice[static_cast<std::size_t>(i)]));
      }
      SignedCode candidate(gcos, displacement, std::move(rows),
                           hadamard_candidate(w, oi));
      OrthogonalityReport report = verify_orthogonal(candidate, budget);
      if (report.pass) {
        result.code = std::move(candidate);
        result.report = std::move(report);
        return true;
      }
      // Affine offsets cannot change the verdict, so after a failure at
      // offset zero the rest of the offsets are skipped when pruning.
      if (options.prune) return false;
    }
    return false;
  };

  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == K) return try_leaf();
    for (std::uint64_t cand = 0; cand < per_slot; ++cand) {
      ++result.nodes_visited;
      choice[static_cast<std::size_t>(depth)] = cand;
      a_of_row[static_cast<std::size_t>(depth)] =
          static_cast<std::uint32_t>(cand >> 1);
      if (options.prune) {
        // New pairs at this depth are exactly those whose vector indices
        // differ in bit `depth`; the check depends only on that XOR.
        bool ok = true;
        const std::uint32_t lo = std::uint32_t{1} << depth;
        const std::uint32_t hi = std::uint32_t{1} << (depth + 1);
        for (std::uint32_t delta = lo; delta < hi && ok; ++delta) {
          std::uint32_t a_rel = 0;
          for (int i = 0; i <= depth; ++i) {
            if ((delta >> i) & 1u) a_rel ^= a_of_row[static_cast<std::size_t>(i)];
          }
          ok = ctx.pair_ok(delta, a_rel);
        }
        if (!ok) continue;
      }
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return result;
}

// ---------------------------------------------------------------------------
// Displacement search

DisplacementSearchResult search_displacements(const BinMatrix& c1_check, int K,
                                              int target_d2,
                                              std::uint64_t max_nodes) {
  if (K < 0) throw error("search_displacements: K must be >= 0");
  if (target_d2 < 1) throw error("search_displacements: target distance must be >= 1");
  const int n = c1_check.n_cols();
  const int base_rank = rank(c1_check);
  if (base_rank != c1_check.n_rows()) {
    throw error("search_displacements: check matrix must have full row rank");
  }
  const int k = n - base_rank;
  if (K > 2 * k - n) {
    throw error("search_displacements: K exceeds 2k - n = " +
                std::to_string(2 * k - n));
  }

  DisplacementSearchResult result;

  // Every word of C2 = rowspan(h1 ++ D) counts toward d2, including the
  // rowspan of h1 itself.
  BinMatrix span = rref(c1_check);
  if (span.n_rows() > 0 &&
      min_weight_in_coset(span, BitWord(n), target_d2 - 1) < target_d2) {
    return result;
  }

  const BinMatrix g1 = standard_form(c1_check).generator_original_coords();
  std::vector<int> chosen;
  std::vector<BinMatrix> span_stack{span};

  auto dfs = [&](auto&& self, int next_row) -> bool {
    if (static_cast<int>(chosen.size()) == K) return true;
    const int remaining = K - static_cast<int>(chosen.size());
    for (int i = next_row; i + remaining <= g1.n_rows(); ++i) {
      if (result.nodes >= max_nodes) {
        result.aborted = true;
        return false;
      }
      ++result.nodes;
      const BitWord& row = g1.row(i);
      const BinMatrix& cur = span_stack.back();
      if (in_rowspan(cur, row)) continue;  // coset already represented
      // All new words of the enlarged span lie in the coset row + cur.
      if (min_weight_in_coset(cur, row, target_d2 - 1) < target_d2) continue;
      chosen.push_back(i);
      BinMatrix wider = cur;
      wider.append_row(row);
      span_stack.push_back(rref(wider));
      if (self(self, i + 1)) return true;
      span_stack.pop_back();
      chosen.pop_back();
      if (result.aborted) return false;
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    BinMatrix displacement = BinMatrix::empty(n);
    for (int i : chosen) displacement.append_row(g1.row(i));
    result.code = build_from_h1_d(c1_check, displacement);
    result.rows_chosen = chosen;
  }
  return result;
}

}  // namespace qec
