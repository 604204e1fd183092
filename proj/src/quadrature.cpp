#include "lenard/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "lenard/errors.hpp"

namespace lenard {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

double refine(const std::function<double(double)>& f, double a, double b, double whole, double tol,
              int depth) {
  const double mid = 0.5 * (a + b);
  const double left = Rule::integrate(f, a, mid);
  const double right = Rule::integrate(f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) <= tol) return left + right;
  return refine(f, a, mid, left, 0.5 * tol, depth - 1) + refine(f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
  if (a == b) return 0.0;
  return refine(f, a, b, Rule::integrate(f, a, b), tol, max_depth);
}

void require_clear_segment(const SingularLocus& locus, const Point& from, const Point& to, double margin) {
  if (from.size() != to.size()) throw DimensionMismatch("segment endpoints differ in dimension");
  constexpr int kProbes = 512;
  const std::vector<int> start = locus.signs(from);
  for (int s = 0; s <= kProbes; ++s) {
    const double t = static_cast<double>(s) / kProbes;
    const Point p = from + t * (to - from);
    if (locus.signs(p) != start || !locus.is_regular(p, margin))
      throw PathCrossesSingularity("integration segment meets the singular locus near t = " + std::to_string(t));
  }
}

double line_integral(const OneFormField& w, const Point& from, const Point& to, double tol) {
  require_clear_segment(w.locus, from, to);
  const Vector dir = to - from;
  auto integrand = [&](double t) { return w.coeff(from + t * dir).dot(dir); };
  return integrate_adaptive(integrand, 0.0, 1.0, tol);
}

}  // namespace lenard
