#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

namespace kgg {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// path kept for testing and benchmarking; both produce identical results.
enum class Exec { serial, parallel };

/// results[i] = fn(i) for i in [0, n), evaluated with OpenMP when requested.
/// The first exception thrown by any iteration is rethrown on the caller.
template <typename Fn>
auto parallel_map(std::size_t n, Exec exec, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(n);
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Concatenate per-task result vectors in task order.
template <typename T>
std::vector<T> flatten(std::vector<std::vector<T>>&& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& p : parts) {
    for (auto& x : p) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace kgg
