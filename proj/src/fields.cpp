#include "lenard/fields.hpp"

#include <algorithm>
#include <cmath>

#include "lenard/errors.hpp"

namespace lenard {

namespace {

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw DimensionMismatch("fields live on different charts: '" + a.name + "' vs '" + b.name + "'");
}

SingularLocus merged(const SingularLocus& a, const SingularLocus& b) {
  SingularLocus out = a;
  out.append(b);
  return out;
}

double scaled_gap(const Matrix& fd, const Matrix& exact) {
  const double scale = std::max(1.0, exact.cwiseAbs().maxCoeff());
  return (fd - exact).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

OneFormField constant_form(const Chart& chart, const Vector& coeff) {
  if (static_cast<std::size_t>(coeff.size()) != chart.dim) throw DimensionMismatch("constant form size");
  const auto n = static_cast<Eigen::Index>(chart.dim);
  return {chart, [coeff](const Point&) { return coeff; }, [n](const Point&) { return Matrix(Matrix::Zero(n, n)); }, {}};
}

OneFormField coordinate_form(const Chart& chart, std::size_t i) {
  if (i >= chart.dim) throw DimensionMismatch("coordinate index out of range");
  return constant_form(chart, Vector::Unit(static_cast<Eigen::Index>(chart.dim), static_cast<Eigen::Index>(i)));
}

VectorFieldSpec constant_vector_field(const Chart& chart, const Vector& comp) {
  if (static_cast<std::size_t>(comp.size()) != chart.dim) throw DimensionMismatch("constant field size");
  const auto n = static_cast<Eigen::Index>(chart.dim);
  return {chart, [comp](const Point&) { return comp; }, [n](const Point&) { return Matrix(Matrix::Zero(n, n)); }, {}};
}

VectorFieldSpec coordinate_vector_field(const Chart& chart, std::size_t i) {
  if (i >= chart.dim) throw DimensionMismatch("coordinate index out of range");
  return constant_vector_field(chart, Vector::Unit(static_cast<Eigen::Index>(chart.dim), static_cast<Eigen::Index>(i)));
}

TensorField11 identity_tensor(const Chart& chart) {
  return constant_tensor(chart, Matrix::Identity(static_cast<Eigen::Index>(chart.dim), static_cast<Eigen::Index>(chart.dim)));
}

TensorField11 constant_tensor(const Chart& chart, const Matrix& m) {
  const auto n = static_cast<Eigen::Index>(chart.dim);
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("constant tensor size");
  return {chart, [m](const Point&) { return m; },
          [n](const Point&) { return MatrixGradient(static_cast<std::size_t>(n), Matrix::Zero(n, n)); }, {}};
}

OneFormField differential(const ScalarField& f, std::function<Matrix(const Point&)> hessian) {
  return {f.chart, f.gradient, std::move(hessian), f.locus};
}

OneFormField apply_covector(const TensorField11& k, const OneFormField& theta) {
  require_same_chart(k.chart, theta.chart);
  auto coeff = [k, theta](const Point& p) -> Vector { return k.mat(p).transpose() * theta.coeff(p); };
  auto jac = [k, theta](const Point& p) -> Matrix {
    const Matrix m = k.mat(p);
    const Vector t = theta.coeff(p);
    const MatrixGradient dm = k.jac(p);
    Matrix out = m.transpose() * theta.jac(p);
    for (std::size_t c = 0; c < dm.size(); ++c) out.col(static_cast<Eigen::Index>(c)) += dm[c].transpose() * t;
    return out;
  };
  return {k.chart, coeff, jac, merged(k.locus, theta.locus)};
}

VectorFieldSpec apply_vector(const TensorField11& k, const VectorFieldSpec& x) {
  require_same_chart(k.chart, x.chart);
  auto comp = [k, x](const Point& p) -> Vector { return k.mat(p) * x.comp(p); };
  auto jac = [k, x](const Point& p) -> Matrix {
    const Vector v = x.comp(p);
    const MatrixGradient dm = k.jac(p);
    Matrix out = k.mat(p) * x.jac(p);
    for (std::size_t c = 0; c < dm.size(); ++c) out.col(static_cast<Eigen::Index>(c)) += dm[c] * v;
    return out;
  };
  return {k.chart, comp, jac, merged(k.locus, x.locus)};
}

TensorField11 multiply(const TensorField11& k, const TensorField11& l) {
  require_same_chart(k.chart, l.chart);
  auto mat = [k, l](const Point& p) -> Matrix { return k.mat(p) * l.mat(p); };
  auto jac = [k, l](const Point& p) -> MatrixGradient {
    const Matrix mk = k.mat(p), ml = l.mat(p);
    const MatrixGradient dk = k.jac(p), dl = l.jac(p);
    MatrixGradient out(dk.size());
    for (std::size_t c = 0; c < dk.size(); ++c) out[c] = dk[c] * ml + mk * dl[c];
    return out;
  };
  return {k.chart, mat, jac, merged(k.locus, l.locus)};
}

TensorField11 add_scalar_identity(const TensorField11& k, const ScalarField& s) {
  require_same_chart(k.chart, s.chart);
  auto mat = [k, s](const Point& p) -> Matrix {
    Matrix m = k.mat(p);
    m.diagonal().array() += s.value(p);
    return m;
  };
  auto jac = [k, s](const Point& p) -> MatrixGradient {
    MatrixGradient out = k.jac(p);
    const Vector g = s.gradient(p);
    for (std::size_t c = 0; c < out.size(); ++c) out[c].diagonal().array() += g(static_cast<Eigen::Index>(c));
    return out;
  };
  return {k.chart, mat, jac, merged(k.locus, s.locus)};
}

OneFormField difference(const OneFormField& a, const OneFormField& b) {
  require_same_chart(a.chart, b.chart);
  return {a.chart, [a, b](const Point& p) -> Vector { return a.coeff(p) - b.coeff(p); },
          [a, b](const Point& p) -> Matrix { return a.jac(p) - b.jac(p); }, merged(a.locus, b.locus)};
}

double fd_step(double coordinate) { return 1e-5 * std::max(1.0, std::abs(coordinate)); }

Matrix fd_jacobian(const std::function<Vector(const Point&)>& f, const Point& p) {
  const Vector f0 = f(p);
  Matrix out(f0.size(), p.size());
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    const double h = fd_step(p(j));
    Point plus = p, minus = p;
    plus(j) += h;
    minus(j) -= h;
    out.col(j) = (f(plus) - f(minus)) / (2.0 * h);
  }
  return out;
}

MatrixGradient fd_matrix_gradient(const std::function<Matrix(const Point&)>& f, const Point& p) {
  MatrixGradient out(static_cast<std::size_t>(p.size()));
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    const double h = fd_step(p(j));
    Point plus = p, minus = p;
    plus(j) += h;
    minus(j) -= h;
    out[static_cast<std::size_t>(j)] = (f(plus) - f(minus)) / (2.0 * h);
  }
  return out;
}

double fd_mismatch(const OneFormField& w, const Point& p) {
  return scaled_gap(fd_jacobian(w.coeff, p), w.jac(p));
}

double fd_mismatch(const VectorFieldSpec& x, const Point& p) {
  return scaled_gap(fd_jacobian(x.comp, p), x.jac(p));
}

double fd_mismatch(const TensorField11& k, const Point& p) {
  const MatrixGradient fd = fd_matrix_gradient(k.mat, p);
  const MatrixGradient exact = k.jac(p);
  double worst = 0.0;
  for (std::size_t c = 0; c < fd.size(); ++c) worst = std::max(worst, scaled_gap(fd[c], exact[c]));
  return worst;
}

}  // namespace lenard
