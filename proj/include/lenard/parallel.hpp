#pragma once

// Batch evaluation of per-point residual kernels with a max-reduction.
//
// Two implementations are kept side by side: a plain serial loop, used as
// the reference in tests, and an OpenMP loop over points. Max is exact and
// order independent, so both produce bit-identical results.

#include <cmath>
#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "lenard/chart.hpp"

namespace lenard {

enum class Execution { serial, parallel };

/// max that propagates NaN, so a NaN residual can never read as a pass.
inline double nan_max(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::nan("");
  return a > b ? a : b;
}

/// Reference implementation. kernel(p) returns `width` residuals.
template <class Kernel>
std::vector<double> max_reduce_serial(std::span<const Point> points, std::size_t width,
                                      Kernel&& kernel) {
  std::vector<double> out(width, 0.0);
  for (const Point& p : points) {
    const std::vector<double> r = kernel(p);
    for (std::size_t c = 0; c < width; ++c) out[c] = nan_max(out[c], r[c]);
  }
  return out;
}

/// OpenMP implementation; per-point rows are stored, then reduced serially.
/// The first exception thrown by any kernel call (in point order) is rethrown.
template <class Kernel>
std::vector<double> max_reduce_parallel(std::span<const Point> points, std::size_t width,
                                        Kernel&& kernel) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<std::vector<double>> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[i] = kernel(points[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<double> out(width, 0.0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < width; ++c) out[c] = nan_max(out[c], r[c]);
  return out;
}

template <class Kernel>
std::vector<double> max_reduce(std::span<const Point> points, std::size_t width, Kernel&& kernel,
                               Execution exec = Execution::parallel) {
  if (exec == Execution::serial) return max_reduce_serial(points, width, kernel);
  return max_reduce_parallel(points, width, kernel);
}

/// Number of OpenMP threads available (1 without OpenMP).
int available_threads();

}  // namespace lenard
