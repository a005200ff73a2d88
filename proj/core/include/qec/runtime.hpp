#pragma once

// Process-wide runtime knobs.

namespace qec {

/// Number of worker threads used by parallelizable sweeps (minimum-distance
/// enumeration, orthogonality pair checks).  Initialized once from the
/// QEC_WORKERS environment variable (default 1, clamped to [1, 256]).
/// All parallel reductions are order-independent, so results do not depend
/// on this value.
int worker_count();

/// Override the worker count programmatically (tests, benchmarks).
void set_worker_count(int n);

}  // namespace qec
