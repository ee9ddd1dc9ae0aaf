#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace parcut {

// Runs fn(begin, end, worker) on `workers` contiguous slices of [0, n).
// The first exception thrown by any worker is rethrown after all joined.
template <class Fn>
void parallel_ranges(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, std::max<std::size_t>(n, 1)));
  if (workers == 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          fn(n * w / workers, n * (w + 1) / workers, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace parcut
