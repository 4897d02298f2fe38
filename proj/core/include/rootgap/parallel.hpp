#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rootgap {

// Process-wide worker count used by parallel_for / parallel_reduce.
// Results are bit-identical for any setting: work is split into fixed-size
// blocks, each block writes its own slot, and slots are combined in index
// order on the calling thread.
void set_thread_count(unsigned n);
unsigned thread_count();
unsigned hardware_threads();

// Runs fn(i) for i in [0, n). Blocks of indices may execute on any worker,
// but fn must only write state owned by index i (or block-local state).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Same contract, but hands each worker a contiguous [begin, end) range so the
// callee can run a tight loop and keep its own accumulator per range.
void parallel_for_ranges(std::size_t n, std::size_t block,
                         const std::function<void(std::size_t, std::size_t)>& fn);

// Deterministic sum of map(i) over [0, n): fixed 1024-wide blocks are summed
// left-to-right within each block, and block partials are folded in block
// order, independent of the worker count.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& map);

// Generic deterministic block reduction: block_eval(begin, end) must compute
// its partial serially in index order; partials are folded in block order.
template <class T, class BlockEval, class Fold>
T parallel_block_reduce(std::size_t n, std::size_t block, T init,
                        BlockEval&& block_eval, Fold&& fold) {
  if (n == 0) return init;
  if (block == 0) block = 1;
  const std::size_t nblocks = (n + block - 1) / block;
  std::vector<T> partial(nblocks, init);
  parallel_for(nblocks, [&](std::size_t b) {
    const std::size_t lo = b * block;
    const std::size_t hi = lo + block < n ? lo + block : n;
    partial[b] = block_eval(lo, hi);
  });
  T acc = init;
  for (std::size_t b = 0; b < nblocks; ++b) acc = fold(acc, partial[b]);
  return acc;
}

}  // namespace rootgap
