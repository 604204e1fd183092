#include "lenard/wdvv.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lenard/errors.hpp"
#include "lenard/sampling.hpp"

namespace lenard::wdvv {

namespace {

using Index = Eigen::Index;

// Pair term G(u) = u^2 log u^2 and its derivatives; log u^2 = 2 log|u|.
double log_sq(double u) { return 2.0 * std::log(std::abs(u)); }
double g0(double u) { return u * u * log_sq(u); }
double g1(double u) { return 2.0 * u * log_sq(u) + 2.0 * u; }
double g2(double u) { return 2.0 * log_sq(u) + 6.0; }
double g3(double u) { return 4.0 / u; }

double scaled_gap(const Matrix& fd, const Matrix& exact) {
  const double scale = std::max(1.0, exact.cwiseAbs().maxCoeff());
  return (fd - exact).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

VeselovPotential::VeselovPotential(std::size_t n_, double m_, double scale_) : n(n_), m(m_), scale(scale_) {
  if (n < 2) throw InvalidParameter("Veselov potential needs n >= 2");
  if (m == 0.0 || !std::isfinite(m)) throw InvalidParameter("Veselov potential needs m != 0");
}

double VeselovPotential::value(const Point& x) const {
  double f = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = i + 1; j < x.size(); ++j) f += g0(x(i) - x(j));
    f += g0(x(i)) / m;
  }
  return scale * f;
}

Vector VeselovPotential::gradient(const Point& x) const {
  Vector g = Vector::Zero(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = 0; j < x.size(); ++j)
      if (j != i) g(i) += g1(x(i) - x(j));
    g(i) += g1(x(i)) / m;
  }
  return scale * g;
}

Matrix VeselovPotential::hessian(const Point& x) const {
  locus().require_regular(x);
  const Index dim = x.size();
  Matrix h = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      if (j == i) continue;
      const double v = g2(x(i) - x(j));
      h(i, j) = -v;
      h(i, i) += v;
    }
    h(i, i) += g2(x(i)) / m;
  }
  return scale * h;
}

Tensor3 VeselovPotential::third(const Point& x) const {
  locus().require_regular(x);
  const Index dim = x.size();
  Tensor3 c(static_cast<std::size_t>(dim), Matrix::Zero(dim, dim));
  auto at = [&](Index a, Index b, Index d) -> double& { return c[static_cast<std::size_t>(a)](b, d); };
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      if (j == i) continue;
      const double v = g3(x(i) - x(j));
      // F_iij = -G'''(x_i - x_j), F_iii collects +G'''.
      at(i, i, j) = at(i, j, i) = at(j, i, i) = -v;
      at(i, i, i) += v;
    }
    at(i, i, i) += g3(x(i)) / m;
  }
  for (auto& s : c) s *= scale;
  return c;
}

SingularLocus VeselovPotential::locus() const {
  SingularLocus locus;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto a = static_cast<Index>(i), b = static_cast<Index>(j);
      locus.add({"x" + std::to_string(i + 1) + "-x" + std::to_string(j + 1),
                 [a, b](const Point& x) { return x(a) - x(b); }});
    }
    const auto a = static_cast<Index>(i);
    locus.add({"x" + std::to_string(i + 1), [a](const Point& x) { return x(a); }});
  }
  return locus;
}

Prepotential VeselovPotential::prepotential() const {
  const VeselovPotential self = *this;
  return {n,
          [self](const Point& x) { return self.value(x); },
          [self](const Point& x) { return self.gradient(x); },
          [self](const Point& x) { return self.hessian(x); },
          [self](const Point& x) { return self.third(x); },
          locus()};
}

Matrix veselov_hessian(const VeselovPotential& f, const Point& x) { return f.hessian(x); }
Tensor3 veselov_third(const VeselovPotential& f, const Point& x) { return f.third(x); }

EulerWeights EulerWeights::scaled_position(double s) {
  return {[s](const Point& x) -> Vector { return s * x; }};
}

EulerWeights EulerWeights::constant(const Vector& lambda) {
  return {[lambda](const Point&) { return lambda; }};
}

double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double lo = s(s.size() - 1);
  return lo == 0.0 ? INFINITY : s(0) / lo;
}

double commutation_residual(const Tensor3& c, const Matrix& metric, std::string_view what) {
  const double cond = condition_number(metric);
  if (!std::isfinite(cond) || cond > kMaxConditionNumber)
    throw SingularMatrixError(std::string(what) + " (condition number " + std::to_string(cond) + ")");
  const Matrix inv = metric.inverse();
  const double inv_norm = max_abs(inv);
  double worst = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t l = j + 1; l < c.size(); ++l) {
      const Matrix d = c[j] * inv * c[l] - c[l] * inv * c[j];
      const double scale = std::max(1.0, max_abs(c[j]) * inv_norm * max_abs(c[l]));
      worst = std::max(worst, max_abs(d) / scale);
    }
  return worst;
}

double wdvv_residual(const Prepotential& f, const Point& x) {
  f.locus.require_regular(x);
  const Tensor3 c = f.third(x);
  return commutation_residual(
      c, c[0],
      "dh/dx_1 is singular: the 1-forms dA_{1l} are not linearly independent at this point");
}

Matrix g_matrix(const Prepotential& f, const EulerWeights& w, const Point& x) {
  f.locus.require_regular(x);
  const Tensor3 c = f.third(x);
  const Vector lambda = w.at(x);
  if (static_cast<std::size_t>(lambda.size()) != c.size()) throw DimensionMismatch("Euler weights have wrong length");
  Matrix g = Matrix::Zero(c[0].rows(), c[0].cols());
  for (std::size_t k = 0; k < c.size(); ++k) g += lambda(static_cast<Index>(k)) * c[k];
  return g;
}

double generalized_wdvv_residual(const Prepotential& f, const EulerWeights& w, const Point& x) {
  const Matrix g = g_matrix(f, w, x);
  return commutation_residual(f.third(x), g, "g = sum lambda_k dh/dx_k is singular");
}

double gradient_fd_mismatch(const Prepotential& f, const Point& x) {
  const Matrix fd = fd_jacobian([&](const Point& u) { return Vector::Constant(1, f.value(u)); }, x);
  return scaled_gap(fd, f.gradient(x).transpose());
}

double hessian_fd_mismatch(const Prepotential& f, const Point& x) {
  return scaled_gap(fd_jacobian(f.gradient, x), f.hessian(x));
}

double third_fd_mismatch(const Prepotential& f, const Point& x) {
  const MatrixGradient fd = fd_matrix_gradient(f.hessian, x);
  const Tensor3 c = f.third(x);
  double worst = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) worst = std::max(worst, scaled_gap(fd[k], c[k]));
  return worst;
}

std::vector<Point> sample_points(const Prepotential& f, std::size_t count, std::uint64_t seed) {
  Sampler sampler(seed);
  SamplingDomain domain;
  domain.dim = f.dim;
  domain.locus = f.locus;
  return sample_regular(sampler, domain, count);
}

VerificationReport verify_prepotential(const Prepotential& f, std::span<const Point> points,
                                       const WdvvSuiteOptions& opts) {
  const std::size_t width = opts.generalized ? 7 : 5;
  std::optional<Matrix> g_ref;
  if (opts.generalized && !points.empty()) g_ref = g_matrix(f, opts.weights, points.front());

  auto kernel = [&](const Point& x) {
    std::vector<double> r(width, 0.0);
    r[0] = wdvv_residual(f, x);
    r[1] = total_symmetry_residual(f.third(x));
    r[2] = gradient_fd_mismatch(f, x);
    r[3] = hessian_fd_mismatch(f, x);
    r[4] = third_fd_mismatch(f, x);
    if (opts.generalized) {
      r[5] = generalized_wdvv_residual(f, opts.weights, x);
      r[6] = max_abs(g_matrix(f, opts.weights, x) - *g_ref);
    }
    return r;
  };
  const auto worst = max_reduce(points, width, kernel, opts.exec);

  VerificationReport report;
  const std::size_t n = points.size();
  report.add("wdvv", n, worst[0], opts.tol.analytic);
  report.add("third_derivative_symmetry", n, worst[1], opts.tol.analytic);
  report.add("gradient_fd", n, worst[2], opts.tol.fd);
  report.add("hessian_fd", n, worst[3], opts.tol.fd);
  report.add("third_fd", n, worst[4], opts.tol.fd);
  if (opts.generalized) {
    report.add("generalized_wdvv", n, worst[5], opts.tol.analytic);
    report.add("g_point_independence", n, worst[6], opts.tol.analytic);
  }
  return report;
}

}  // namespace lenard::wdvv
