#include "qec/cssplus.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qec {

namespace {

// Derive the full-rank generator of the dual of C2 from the stacked matrix.
BinMatrix derive_h2(const BinMatrix& stack) {
  BinMatrix reduced = rref(stack);
  if (reduced.n_rows() == 0) return BinMatrix::identity(stack.n_cols());
  return standard_form(reduced).generator_original_coords();
}

}  // namespace

PlusCode build_from_h1_d(BinMatrix h1, BinMatrix displacement) {
  const int base_rank = rank(h1);
  if (base_rank != h1.n_rows()) {
    throw error("plus code: h1 does not have full row rank");
  }
  if (displacement.n_rows() > 0 && displacement.n_cols() != h1.n_cols()) {
    throw error("plus code: displacement width does not match h1");
  }
  for (int r = 0; r < displacement.n_rows(); ++r) {
    for (int i = 0; i < h1.n_rows(); ++i) {
      if (dot(h1.row(i), displacement.row(r))) {
        throw error("plus code: displacement row " + std::to_string(r) +
                    " fails base check row " + std::to_string(i));
      }
    }
  }
  BinMatrix stack = h1.vstack(displacement);
  if (displacement.n_rows() == 0 && stack.n_cols() == 0) {
    stack = BinMatrix::empty(h1.n_cols());
  }
  if (rank(stack) != base_rank + displacement.n_rows()) {
    throw error(
        "plus code: displacement rows are dependent modulo the base checks "
        "(cosets not distinct)");
  }
  PlusCode p;
  p.h1_ = std::move(h1);
  p.d_ = std::move(displacement);
  p.h2_ = derive_h2(p.stack());
  return p;
}

PlusCode build_from_weakly_self_dual(const LinearCode& c) {
  if (!is_weakly_self_dual(c)) {
    throw error("build_from_weakly_self_dual: dual is not contained in the code");
  }
  const int K = 2 * c.k() - c.n();
  // K = k - (n - k) >= 0 follows from containment of the dual.
  BinMatrix displacement = BinMatrix::empty(c.n());
  BinMatrix span = rref(c.check());
  for (int i = 0; i < c.generator().n_rows() && displacement.n_rows() < K; ++i) {
    const BitWord& g = c.generator().row(i);
    if (!in_rowspan(span, g)) {
      displacement.append_row(g);
      span.append_row(g);
      span = rref(span);
    }
  }
  if (displacement.n_rows() != K) {
    throw error("build_from_weakly_self_dual: internal rank shortfall");
  }
  PlusCode p = build_from_h1_d(c.check(), displacement);
  p.from_wsd_ = true;
  return p;
}

CodeParams verify_plus(const PlusCode& p) {
  CodeParams cp;
  cp.n = p.n();
  cp.K = p.K();
  cp.d1 = min_weight_in_coset(null_space(p.h1()), BitWord(p.n()), -1);
  if (p.from_weakly_self_dual()) {
    cp.d2 = cp.d1;  // C2 = C1 for a weakly-self-dual build
  } else {
    cp.d2 = min_weight_in_coset(rref(p.stack()), BitWord(p.n()), -1);
  }
  cp.t1 = (cp.d1 - 1) / 2;
  cp.t2 = (cp.d2 - 1) / 2;
  return cp;
}

PlusCode reduce_kk1(const PlusCode& p, int check_row) {
  if (!p.from_weakly_self_dual()) {
    throw error("reduce_kk1 requires a code built from a weakly-self-dual code");
  }
  BinMatrix shortened = delete_row_and_pivot(p.h1(), check_row);
  return build_from_weakly_self_dual(LinearCode::from_check(shortened));
}

int hamming_k_bound(int n) {
  if (n < 1) throw error("hamming_k_bound: n must be >= 1");
  int r = 0;
  while ((1 << r) < n + 1) ++r;  // r = ceil(log2(n + 1))
  return n - 2 * r;
}

}  // namespace qec
