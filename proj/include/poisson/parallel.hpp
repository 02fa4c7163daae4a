#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace poisson {

/// Worker count: POISSON_POINCARE_THREADS if set to a positive integer,
/// otherwise the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("POISSON_POINCARE_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies `f` to every item on a small thread pool. Results come back in
/// input order; the first exception thrown by any call is rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F f) {
  using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
  std::vector<R> out(items.size());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), items.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        out[i] = f(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace poisson
