#pragma once

// Index-ordered map over a vector, with a plain serial loop kept as the
// reference and an OpenMP loop for sweeps. Both return results in input
// order, so callers see identical output either way.

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace klr {

enum class Exec { serial, parallel };

template <class T, class F>
auto map_serial(const std::vector<T>& items, F&& f) {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<R> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(f(item));
  return out;
}

template <class T, class F>
auto map_omp(const std::vector<T>& items, F&& f) {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<R> out(items.size());
  const auto n = static_cast<std::ptrdiff_t>(items.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = f(items[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical(klr_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <class T, class F>
auto map_items(const std::vector<T>& items, F&& f, Exec exec) {
  return exec == Exec::parallel ? map_omp(items, f) : map_serial(items, f);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace klr
