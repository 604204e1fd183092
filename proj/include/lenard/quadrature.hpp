#pragma once

#include <functional>

#include "lenard/fields.hpp"

namespace lenard {

/// Adaptive Gauss-Legendre quadrature on [a, b]: a 20-point rule is bisected
/// until the two halves agree with the whole to `tol` (scaled by the
/// sub-interval fraction).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10, int max_depth = 40);

/// Line integral of w along the straight segment from -> to.
/// Throws PathCrossesSingularity if any locus predicate changes sign or comes
/// within the margin along the segment.
double line_integral(const OneFormField& w, const Point& from, const Point& to, double tol = 1e-10);

/// Throws PathCrossesSingularity when the segment meets the locus.
void require_clear_segment(const SingularLocus& locus, const Point& from, const Point& to,
                           double margin = kRegularityMargin);

}  // namespace lenard
