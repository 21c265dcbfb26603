#ifndef PHRASELM_PARALLEL_H_
#define PHRASELM_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace phraselm {

// Splits [0, n) into `threads` contiguous ranges and runs fn(begin, end) on
// each. Ranges are assigned in index order, so results collected per-range and
// combined in range order do not depend on the thread count. fn must be safe
// to call concurrently. If workers throw, the exception from the earliest
// range is rethrown here.
template <typename F>
void ParallelFor(std::size_t n, int threads, F&& fn) {
  if (threads < 1) threads = 1;
  std::size_t workers = std::min<std::size_t>(threads, n);
  if (workers <= 1) {
    if (n > 0) fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  std::size_t chunk = n / workers;
  std::size_t extra = n % workers;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < workers; ++i) {
    std::size_t end = begin + chunk + (i < extra ? 1 : 0);
    pool.emplace_back([&fn, &error = errors[i], begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        error = std::current_exception();
      }
    });
    begin = end;
  }
  for (std::thread& t : pool) t.join();
  for (std::exception_ptr& error : errors)
    if (error) std::rethrow_exception(error);
}

}  // namespace phraselm

#endif  // PHRASELM_PARALLEL_H_
