#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace dcgr {

/// Splits [0, total) into `threads` contiguous ranges and runs fn(begin, end) on each.
/// Results are returned in range order, so merging them is independent of scheduling.
template <class Fn>
auto parallel_ranges(std::uint64_t total, unsigned threads, Fn fn) {
  using R = std::invoke_result_t<Fn&, std::uint64_t, std::uint64_t>;
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  std::vector<R> out(parts);
  std::vector<std::exception_ptr> errors(parts);
  auto run = [&](std::uint64_t k) {
    const std::uint64_t begin = total / parts * k + std::min(k, total % parts);
    const std::uint64_t end = begin + total / parts + (k < total % parts ? 1 : 0);
    try {
      out[k] = fn(begin, end);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  if (parts == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t k = 0; k < parts; ++k) pool.emplace_back(run, k);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace dcgr
