#include "howe/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace howe {

namespace {

// Set inside pool threads; nested parallel_for calls then run inline.
thread_local bool t_in_worker = false;

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("HOWE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t n, unsigned workers,
                  const std::function<void(std::uint64_t)>& body) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), n));
  if (workers <= 1 || t_in_worker) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        t_in_worker = true;
        for (std::uint64_t i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::int64_t parallel_sum(std::uint64_t n, unsigned workers,
                          const std::function<std::int64_t(std::uint64_t, std::uint64_t)>& chunk) {
  constexpr std::uint64_t kChunk = 1 << 15;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  if (chunks <= 1) return n == 0 ? 0 : chunk(0, n);
  std::vector<std::int64_t> partial(chunks, 0);
  parallel_for(chunks, workers, [&](std::uint64_t c) {
    partial[c] = chunk(c * kChunk, std::min(n, (c + 1) * kChunk));
  });
  std::int64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace howe
