#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace motif {

inline int default_thread_count() {
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(chunk, begin, end) for the ranges of a fixed split of [0, total)
/// into `chunk_count` pieces. The split does not depend on `threads`, so any
/// per-chunk partial results merged in chunk order are thread-count independent.
/// Chunk boundaries are multiples of `align`.
template <typename Body>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk_count, int threads, Body&& body,
                     std::uint64_t align = 1) {
  if (total == 0) return;
  chunk_count = std::max<std::uint64_t>(1, chunk_count);
  std::uint64_t step = (total + chunk_count - 1) / chunk_count;
  step = (step + align - 1) / align * align;
  chunk_count = (total + step - 1) / step;

  auto run_chunk = [&](std::uint64_t chunk) {
    const std::uint64_t begin = chunk * step;
    const std::uint64_t end = std::min(total, begin + step);
    body(chunk, begin, end);
  };

  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  if (workers == 1 || chunk_count == 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) run_chunk(c);
    return;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::uint64_t w = 0; w < std::min(workers, chunk_count); ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::uint64_t chunk = next.fetch_add(1);
        if (chunk >= chunk_count) return;
        try {
          run_chunk(chunk);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(chunk_count);
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace motif
