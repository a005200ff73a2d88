#include "qec/runtime.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace qec {

namespace {

int clamp_workers(long v) {
  if (v < 1) return 1;
  if (v > 256) return 256;
  return static_cast<int>(v);
}

int initial_worker_count() {
  if (const char* env = std::getenv("QEC_WORKERS")) {
    try {
      return clamp_workers(std::stol(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

std::atomic<int>& worker_count_storage() {
  static std::atomic<int> count{initial_worker_count()};
  return count;
}

}  // namespace

int worker_count() { return worker_count_storage().load(std::memory_order_relaxed); }

void set_worker_count(int n) {
  worker_count_storage().store(clamp_workers(n), std::memory_order_relaxed);
}

}  // namespace qec
