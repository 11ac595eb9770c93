#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace heffter {

/// Worker count: HF_THREADS caps it when set, otherwise hardware concurrency.
inline int thread_budget() {
  int hw = (int)std::thread::hardware_concurrency();
  if (hw < 1) hw = 1;
  if (const char* s = std::getenv("HF_THREADS")) {
    int cap = std::atoi(s);
    if (cap >= 1) return cap;
  }
  return hw;
}

/// Runs fn(i) for i in [0, n) across threads.  fn must only write to
/// per-index state so the result is independent of the sharding.
template <class Fn>
void parallel_for(long long n, Fn&& fn) {
  int workers = thread_budget();
  if (workers <= 1 || n < 2) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  if ((long long)workers > n) workers = (int)n;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (long long i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace heffter
