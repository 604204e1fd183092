#include <gtest/gtest.h>

#include <cmath>

#include "lenard/errors.hpp"
#include "lenard/quadrature.hpp"

using namespace lenard;

namespace {

const Chart kX{"x", 3};

Point pt(double a, double b, double c) { return (Point(3) << a, b, c).finished(); }

// d log(x1) + d(x2 x3), with locus x1 = 0.
OneFormField exact_form() {
  return {kX, [](const Point& p) { return pt(1 / p(0), p(2), p(1)); },
          [](const Point& p) {
            Matrix j = Matrix::Zero(3, 3);
            j(0, 0) = -1 / (p(0) * p(0));
            j(1, 2) = j(2, 1) = 1;
            return j;
          },
          SingularLocus({{"x1", [](const Point& p) { return p(0); }}})};
}

double potential(const Point& p) { return std::log(p(0)) + p(1) * p(2); }

}  // namespace

TEST(Quadrature, Polynomial) {
  EXPECT_NEAR(integrate_adaptive([](double t) { return t * t * t; }, 0, 2), 4.0, 1e-13);
}

TEST(Quadrature, PeakedIntegrand) {
  const double exact = std::atan(100.0) * 2 / 100.0;
  EXPECT_NEAR(integrate_adaptive([](double t) { return 1 / (1 + 1e4 * t * t); }, -1, 1), exact, 1e-10);
}

TEST(LineIntegral, ExactFormMatchesPotential) {
  const Point a = pt(0.5, 1, 2), b = pt(3, -1, 0.5);
  EXPECT_NEAR(line_integral(exact_form(), a, b), potential(b) - potential(a), 1e-10);
}

TEST(LineIntegral, ClosedLoopVanishes) {
  const Point a = pt(0.5, 1, 2), b = pt(3, -1, 0.5), c = pt(1, 2, -2);
  const auto w = exact_form();
  EXPECT_NEAR(line_integral(w, a, b) + line_integral(w, b, c) + line_integral(w, c, a), 0.0, 1e-10);
}

TEST(LineIntegral, CrossingLocusThrows) {
  EXPECT_THROW(line_integral(exact_form(), pt(-1, 0, 0), pt(1, 0, 0)), PathCrossesSingularity);
  EXPECT_THROW(require_clear_segment(exact_form().locus, pt(0.5, 0, 0), pt(1e-4, 0, 0)), PathCrossesSingularity);
}
