#pragma once

// Deterministic searches: sign allocation over the Hadamard/first-order
// Reed-Muller candidate space (with optional exhaustive mode), and
// displacement-row selection from a classical code's generator.

#include <cstdint>
#include <optional>
#include <vector>

#include "qec/cssplus.hpp"
#include "qec/qstate.hpp"

namespace qec {

/// The 2w candidate sign vectors of length w = 2^r: for candidate index
/// 2a + c (a in [0, w), c in {0, 1}), bit m = <a, m> XOR c where <a, m> is
/// the GF(2) inner product of the r-bit indices.  Index 0 is the zero
/// vector; even indices are the Hadamard rows, odd ones their complements.
std::vector<SignVector> hadamard_candidates(int w);

struct SignSearchOptions {
  /// Also search the offset (one extra candidate slot, innermost loop);
  /// with it the space has (2w)^K * (2w) candidates, without it (2w)^K.
  bool allow_offset = true;
  /// Leave the Hadamard candidate space and enumerate rows (and offset)
  /// over all 2^w sign vectors.  Requires a nonzero candidate_limit.
  bool exhaustive = false;
  /// Hard cap on complete candidates tried in exhaustive mode (0 = none).
  std::uint64_t candidate_limit = 0;
  /// Internal: disable pruning so every candidate is visited (tests).
  bool prune = true;
};

struct SignSearchResult {
  std::optional<SignedCode> code;   ///< first hit, or nullopt
  OrthogonalityReport report;       ///< oracle report of the hit
  std::uint64_t space_size = 0;     ///< full candidate-space cardinality
  /// Complete candidates evaluated by the full oracle.
  std::uint64_t candidates_examined = 0;
  /// Row-assignment attempts visited by the depth-first walk (equals
  /// candidates_examined in exhaustive mode).
  std::uint64_t nodes_visited = 0;
  bool aborted = false;             ///< stopped by candidate_limit
};

/// Find sign generators (one per displacement row, plus optional offset)
/// making all errored code vectors mutually orthogonal within the budget.
/// Depth-first over rows in lexicographic candidate order (row 0 most
/// significant, offset innermost).  Prefix pruning uses exact-oracle pair
/// checks; a complete candidate is accepted only by a full
/// verify_orthogonal run.  Deterministic: always returns the first hit in
/// candidate order.  Returns nullopt code when the skeleton's
/// sign-independent self-checks already fail or the space is exhausted.
SignSearchResult search_signs(const BinMatrix& gcos,
                              const BinMatrix& displacement,
                              const ErrorBudget& budget,
                              const SignSearchOptions& options = {});

struct DisplacementSearchResult {
  std::optional<PlusCode> code;  ///< first hit, or nullopt
  std::vector<int> rows_chosen;  ///< generator row indices of the hit
  std::uint64_t nodes = 0;       ///< candidate rows tried
  bool aborted = false;          ///< stopped by max_nodes
};

/// Choose K displacement rows from the generator of C1 = null(c1_check)
/// (in standard form, mapped back to original coordinates) so that the
/// stacked code C2 keeps minimum distance >= target_d2.  Depth-first over
/// increasing row indices; each accepted row must be independent of the
/// running span and introduce no word of weight < target_d2 (checked by an
/// early-exit coset sweep).  Deterministic first hit.  Requires
/// K <= 2k - n.
DisplacementSearchResult search_displacements(const BinMatrix& c1_check, int K,
                                              int target_d2,
                                              std::uint64_t max_nodes = 200000);

}  // namespace qec
