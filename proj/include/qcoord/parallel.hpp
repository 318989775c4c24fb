#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcoord {

/// Worker count: QCOORD_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int worker_count();

/// Runs body(state, i) for i in [0, count). Each worker thread builds its
/// own state with make_state(), so non-thread-safe engines can be used.
/// Indices are dealt round-robin; the first exception is rethrown.
template <class MakeState, class Body>
void parallel_for(std::size_t count, MakeState make_state, Body body) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count == 0 ? 1 : count);
  if (workers <= 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i) body(state, i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        auto state = make_state();
        for (std::size_t i = w; i < count; i += workers) body(state, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qcoord
