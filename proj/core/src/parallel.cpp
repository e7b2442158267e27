#include "lfsweep/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lfsweep {

int default_thread_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void parallel_for(int begin, int end, int num_threads, const std::function<void(int)>& fn) {
  const int count = end - begin;
  if (count <= 0) return;
  if (num_threads <= 0) num_threads = default_thread_count();
  num_threads = std::min(num_threads, count);

  if (num_threads <= 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }

  std::vector<std::thread> workers;
  workers.reserve(num_threads);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const int chunk = (count + num_threads - 1) / num_threads;
  for (int t = 0; t < num_threads; ++t) {
    const int lo = begin + t * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi]() {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace lfsweep
