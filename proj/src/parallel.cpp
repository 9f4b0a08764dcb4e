#include "netchor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace netchor {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int threads) { g_threads.store(std::max(1, threads)); }

int thread_count() { return g_threads.load(); }

void parallel_blocks(std::size_t blocks, const std::function<void(std::size_t)>& fn) {
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) fn(b);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < blocks; b = next++) {
        try {
          fn(b);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace netchor
