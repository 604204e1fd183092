#include "lenard/gelfand_dikii.hpp"

#include <algorithm>
#include <cmath>

#include "lenard/errors.hpp"
#include "lenard/sampling.hpp"

namespace lenard::gd {

Matrix gd_operator(const Point& w) {
  if (w.size() != 3) throw DimensionMismatch("Gelfand-Dikii point must have 3 coordinates");
  Matrix m = Matrix::Zero(3, 3);
  m(0, 2) = -0.5 * w(1);  // K* dw_0
  m(1, 0) = 2.0;          // K* dw_1
  m(1, 2) = -w(2);
  m(2, 1) = 2.0;  // K* dw_2
  return m;
}

TensorField11 gd_operator_field() {
  auto jac = [](const Point&) -> MatrixGradient {
    MatrixGradient d(3, Matrix::Zero(3, 3));
    d[1](0, 2) = -0.5;
    d[2](1, 2) = -1.0;
    return d;
  };
  return {kWChart, [](const Point& w) { return gd_operator(w); }, jac, {}};
}

ScalarField coordinate_function(std::size_t i) {
  if (i > 2) throw DimensionMismatch("coordinate index out of range");
  const auto k = static_cast<Eigen::Index>(i);
  return {kWChart, [k](const Point& w) { return w(k); }, [k](const Point&) -> Vector { return Vector::Unit(3, k); }, {}};
}

ScalarField constant_shift(const ScalarField& f, double c) {
  return {f.chart, [f, c](const Point& w) { return f.value(w) + c; }, f.gradient, f.locus};
}

ScalarField product(const ScalarField& f, const ScalarField& g) {
  return {f.chart, [f, g](const Point& w) { return f.value(w) * g.value(w); },
          [f, g](const Point& w) -> Vector { return f.value(w) * g.gradient(w) + g.value(w) * f.gradient(w); },
          f.locus};
}

double gd_torsion_identity_residual(const ScalarField& f, const Point& w) {
  const Matrix lhs = nijenhuis_contracted(gd_operator_field(), f, w);
  const Matrix rhs = kTorsionConventionFactor * wedge(Vector::Unit(3, 2), f.gradient(w));
  return max_abs(lhs - rhs);
}

GdComplex gd_complex() {
  const TensorField11 k = gd_operator_field();
  return {{identity_tensor(kWChart), k, add_scalar_identity(multiply(k, k), coordinate_function(2))},
          coordinate_form(kWChart, 2),
          coordinate_vector_field(kWChart, 0)};
}

double chain_independence(const Point& w) {
  const GdComplex c = gd_complex();
  Matrix fields(3, 3), forms(3, 3);
  const Vector x = c.x.comp(w), da = c.dA.coeff(w);
  for (Eigen::Index j = 0; j < 3; ++j) {
    const Matrix m = c.k[static_cast<std::size_t>(j)].mat(w);
    fields.col(j) = m * x;
    forms.row(j) = (m.transpose() * da).transpose();
  }
  return std::min(std::abs(fields.determinant()), std::abs(forms.determinant()));
}

std::vector<Point> sample_points(std::size_t count, std::uint64_t seed) {
  Sampler sampler(seed);
  SamplingDomain domain;
  domain.lo = -2.0;
  domain.hi = 2.0;
  domain.min_gap = 0.0;
  return sample_regular(sampler, domain, count);
}

VerificationReport verify_gd_complex(std::span<const Point> points, double tol, double tol_fd, Execution exec) {
  const GdComplex c = gd_complex();
  const DefinitionChecker checker({c.k[0], c.k[1], c.k[2]}, c.dA, c.x);
  constexpr std::size_t kWidth = 8;
  auto kernel = [&](const Point& w) {
    const DefinitionResiduals d = checker.residuals(w);
    double lie = 0.0;
    for (const auto& k : c.k) lie = std::max(lie, max_abs(lie_derivative(k, c.x, w)));
    return std::vector<double>{d.vector_fields_commute, d.chain_closed, d.square_closed, d.square_symmetric,
                               d.operators_commute,     d.haantjes,     lie,             d.fd_mismatch};
  };
  const auto worst = max_reduce(points, kWidth, kernel, exec);
  VerificationReport report;
  const std::size_t n = points.size();
  const char* names[] = {cond::kFieldsCommute, cond::kChainClosed, cond::kSquareClosed, cond::kSquareSymmetric,
                         cond::kCommute,       cond::kHaantjes,    cond::kSymmetryOfK,  cond::kJacobianFd};
  for (std::size_t i = 0; i < kWidth; ++i) report.add(names[i], n, worst[i], i + 1 == kWidth ? tol_fd : tol);
  return report;
}

}  // namespace lenard::gd
