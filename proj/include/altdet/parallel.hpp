#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altdet::parallel {

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Reference kernel: the smallest `i < n` with `!ok(i)`, evaluated in order.
template <class Ok>
std::optional<std::size_t> first_failure_serial(std::size_t n, Ok&& ok) {
  for (std::size_t i = 0; i < n; ++i)
    if (!ok(i)) return i;
  return std::nullopt;
}

/// Same result as first_failure_serial, with cases spread over OpenMP threads.
///
/// Every index below the reported failure is evaluated, so the answer does not depend
/// on scheduling. An exception from `ok(i)` is rethrown when no failure precedes `i`.
template <class Ok>
std::optional<std::size_t> first_failure(std::size_t n, Ok&& ok) {
  std::atomic<std::size_t> best{n};
  std::size_t error_index = n;
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i > best.load(std::memory_order_relaxed)) continue;
    try {
      if (!ok(i)) {
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }

  const std::size_t found = best.load();
  if (error && error_index <= found) std::rethrow_exception(error);
  if (found == n) return std::nullopt;
  return found;
}

}  // namespace altdet::parallel
