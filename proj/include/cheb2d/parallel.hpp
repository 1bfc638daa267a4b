#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cheb2d {

// Worker count, capped by CHEB2D_THREADS when set.
inline int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("CHEB2D_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

// Splits [0, count) into a fixed number of blocks, independent of the
// thread count, computes one partial per block and folds them pairwise.
// The reduction tree depends only on count, so sums are reproducible.
template <typename T, typename BlockFn, typename Combine>
T deterministic_reduce(int count, BlockFn&& block_fn, Combine&& combine) {
  constexpr int kBlocks = 64;
  const int nblocks = std::max(1, std::min(kBlocks, count));
  std::vector<T> partial(nblocks);
  auto run_block = [&](int b) {
    const int lo = static_cast<int>(static_cast<long long>(count) * b / nblocks);
    const int hi = static_cast<int>(static_cast<long long>(count) * (b + 1) / nblocks);
    partial[b] = block_fn(lo, hi);
  };
  const int workers = std::min(worker_count(), nblocks);
  if (workers <= 1) {
    for (int b = 0; b < nblocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int b = w; b < nblocks; b += workers) run_block(b);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  for (int stride = 1; stride < nblocks; stride *= 2)
    for (int b = 0; b + stride < nblocks; b += 2 * stride)
      partial[b] = combine(partial[b], partial[b + stride]);
  return partial[0];
}

}  // namespace cheb2d
