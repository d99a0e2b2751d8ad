#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace qx {

// Runs fn(i) for i in [0, count). Each task must write only to slots it owns
// (indexed by i), which keeps results identical for any worker count.
template <typename F>
void parallel_for(long count, int jobs, F&& fn) {
  if (count <= 0) return;
  if (jobs <= 1 || count == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  int workers = static_cast<int>(std::min<long>(jobs, count));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (long i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace qx
