#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace cgk::detail {

/// Splits [0, count) into `jobs` contiguous ranges and runs work(lo, hi) on
/// each, one thread per range. Results come back in range order, so callers
/// that concatenate them see the same sequence for any job count. The first
/// exception thrown by a worker is rethrown.
template <typename Result, typename Work>
std::vector<Result> parallel_ranges(std::uint64_t count, std::size_t jobs, Work work) {
  jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1)));
  std::vector<Result> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto run = [&](std::size_t j) {
    const std::uint64_t lo = count * j / jobs, hi = count * (j + 1) / jobs;
    try {
      results[j] = work(lo, hi);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(run, j);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace cgk::detail
