#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace snfgraph::detail {

/// Calls fn(task) for every task in [0, tasks) on up to `jobs` threads.
/// The first exception thrown by any task is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t tasks, unsigned jobs, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, tasks));
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      try {
        fn(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

/// Contiguous [begin, end) ranges covering `count` items, roughly `shards` of them.
inline std::vector<std::pair<std::size_t, std::size_t>> shard_ranges(std::size_t count,
                                                                     std::size_t shards) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (count == 0) return out;
  shards = std::clamp<std::size_t>(shards, 1, count);
  const std::size_t size = (count + shards - 1) / shards;
  for (std::size_t begin = 0; begin < count; begin += size) {
    out.emplace_back(begin, std::min(count, begin + size));
  }
  return out;
}

}  // namespace snfgraph::detail
