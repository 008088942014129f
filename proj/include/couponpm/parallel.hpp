#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace couponpm {

// Samples are generated in fixed-size blocks, each with its own derived
// stream, so results depend on the run seed but not on the worker count.
inline constexpr std::size_t kSampleBlock = 1024;

inline std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

inline std::size_t block_count(std::size_t items) {
  return (items + kSampleBlock - 1) / kSampleBlock;
}

// Calls fn(task, worker) for every task in [0, tasks). Workers pull tasks
// from a shared counter; the first exception thrown is rethrown here.
template <class Fn>
void parallel_tasks(std::size_t tasks, std::size_t threads, Fn&& fn) {
  threads = std::min(resolve_threads(threads), std::max<std::size_t>(tasks, 1));
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t, std::size_t{0});
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = next++; t < tasks; t = next++) fn(t, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace couponpm
