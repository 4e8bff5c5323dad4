#ifndef GUARD_GROUPER_PARALLEL_H
#define GUARD_GROUPER_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace grouper
{

namespace internal
{

// Calls task(i) for i in [0, n) on up to `jobs` threads. The first
// exception thrown by a task is rethrown after all threads finish.
template<typename TASK>
void parallel_for(std::size_t n, unsigned jobs, TASK &&task)
{
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      task(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      auto i = next.fetch_add(1);
      if (i >= n)
        return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = n;
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();

  if (failure)
    std::rethrow_exception(failure);
}

} // namespace internal

} // namespace grouper

#endif // GUARD_GROUPER_PARALLEL_H
