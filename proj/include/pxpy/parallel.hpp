#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pxpy {

inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs body(row, local) for every row in [0, rows), rows dealt round-robin
/// to `workers` threads, each with its own Local accumulator. Returns the
/// accumulators in worker order; callers merge and sort, so the result does
/// not depend on scheduling. The first exception thrown by a worker is
/// rethrown on the calling thread.
template <typename Local, typename Body>
std::vector<Local> parallel_rows(std::size_t rows, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(rows, 1))));
  std::vector<Local> locals(workers);
  if (workers == 1) {
    for (std::size_t r = 0; r < rows; ++r) body(r, locals[0]);
    return locals;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t r = w; r < rows; r += workers) body(r, locals[w]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return locals;
}

}  // namespace pxpy
