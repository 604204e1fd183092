#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "lenard/geometry.hpp"
#include "lenard/parallel.hpp"
#include "lenard/report.hpp"

namespace lenard::wdvv {

/// Prepotential F with analytic Hessian h and third derivatives
/// c[j](l, m) = d^3 F / dx_j dx_l dx_m.
struct Prepotential {
  std::size_t dim = 0;
  std::function<double(const Point&)> value;
  std::function<Vector(const Point&)> gradient;
  std::function<Matrix(const Point&)> hessian;
  std::function<Tensor3(const Point&)> third;
  SingularLocus locus;
};

/// F = scale * [ sum_{i<j} (x_i - x_j)^2 log (x_i - x_j)^2 + (1/m) sum_i x_i^2 log x_i^2 ].
struct VeselovPotential {
  std::size_t n = 3;
  double m = 1.0;
  double scale = 1.0;

  VeselovPotential(std::size_t n_, double m_, double scale_ = 1.0);

  double value(const Point& x) const;
  Vector gradient(const Point& x) const;
  Matrix hessian(const Point& x) const;
  Tensor3 third(const Point& x) const;
  /// Coincident coordinates and zero coordinates.
  SingularLocus locus() const;

  Prepotential prepotential() const;
};

Matrix veselov_hessian(const VeselovPotential& f, const Point& x);
Tensor3 veselov_third(const VeselovPotential& f, const Point& x);

/// Components lambda_k(x) of the Euler-type field X in the x-coordinates.
struct EulerWeights {
  std::function<Vector(const Point&)> at;

  /// lambda = s * x (s = 1/4 gives the quarter-position field).
  static EulerWeights scaled_position(double s);
  static EulerWeights constant(const Vector& lambda);
};

/// Points with cond(h1) above this are refused.
inline constexpr double kMaxConditionNumber = 1e8;

double condition_number(const Matrix& m);

/// Max over (j, l) of |c_j M^-1 c_l - c_l M^-1 c_j|_max, each pair normalized
/// by max(1, |c_j| |M^-1| |c_l|). Throws SingularMatrixError if cond(M) > 1e8.
double commutation_residual(const Tensor3& c, const Matrix& metric, std::string_view what);

/// Ordinary WDVV with the x_1 slice as metric.
double wdvv_residual(const Prepotential& f, const Point& x);

/// g = sum_k lambda_k dh/dx_k.
Matrix g_matrix(const Prepotential& f, const EulerWeights& w, const Point& x);
double generalized_wdvv_residual(const Prepotential& f, const EulerWeights& w, const Point& x);

/// Central-difference cross-checks, each one derivative order up
/// (gradient vs value, hessian vs gradient, third vs hessian), relative-scaled
/// as in fd_mismatch.
double gradient_fd_mismatch(const Prepotential& f, const Point& x);
double hessian_fd_mismatch(const Prepotential& f, const Point& x);
double third_fd_mismatch(const Prepotential& f, const Point& x);

/// Regular sample for Veselov-type potentials: [0.5, 3]^n, gaps >= 0.05.
std::vector<Point> sample_points(const Prepotential& f, std::size_t count, std::uint64_t seed);

struct WdvvSuiteOptions {
  bool generalized = false;
  EulerWeights weights = EulerWeights::scaled_position(0.25);
  Tolerances tol;
  Execution exec = Execution::parallel;
};

/// wdvv residual, third-derivative symmetry, FD cross-checks and (optionally)
/// generalized WDVV over the given points.
VerificationReport verify_prepotential(const Prepotential& f, std::span<const Point> points,
                                       const WdvvSuiteOptions& opts);

}  // namespace lenard::wdvv
