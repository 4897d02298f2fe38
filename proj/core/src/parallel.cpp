#include "rootgap/parallel.hpp"

#include <atomic>
#include <thread>

namespace rootgap {

namespace {
std::atomic<unsigned> g_threads{0};  // 0 = not set yet, use hardware
}

unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n); }

unsigned thread_count() {
  unsigned n = g_threads.load();
  return n == 0 ? hardware_threads() : n;
}

void parallel_for_ranges(std::size_t n, std::size_t block,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (block == 0) block = 1;
  const std::size_t nblocks = (n + block - 1) / block;
  const unsigned workers = thread_count();
  if (workers <= 1 || nblocks <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::size_t lo = b * block;
      fn(lo, lo + block < n ? lo + block : n);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      const std::size_t lo = b * block;
      fn(lo, lo + block < n ? lo + block : n);
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(
      workers - 1 < nblocks - 1 ? workers - 1 : nblocks - 1);
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  // Block size 1: each index is its own unit of work (callers batch if needed).
  parallel_for_ranges(n, 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& map) {
  return parallel_block_reduce<double>(
      n, 1024, 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += map(i);
        return s;
      },
      [](double a, double b) { return a + b; });
}

}  // namespace rootgap
