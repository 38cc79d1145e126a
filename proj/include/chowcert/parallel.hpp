#ifndef CHOWCERT_PARALLEL_HPP
#define CHOWCERT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chowcert {

// Runs body(i) for i in [0, count) on up to `jobs` threads, each thread
// owning a contiguous block of indices. Results must be written to
// caller-owned, per-index slots, so the outcome is identical for every
// thread count.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  if (jobs < 1)
    jobs = 1;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end)
      break;
    threads.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i)
          body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace chowcert

#endif
