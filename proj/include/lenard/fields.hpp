#pragma once

#include <functional>
#include <vector>

#include "lenard/chart.hpp"

namespace lenard {

/// Derivatives of a matrix field: entry k is the partial derivative of the
/// matrix with respect to coordinate k.
using MatrixGradient = std::vector<Matrix>;

/// Scalar field with analytic gradient.
struct ScalarField {
  Chart chart;
  std::function<double(const Point&)> value;
  std::function<Vector(const Point&)> gradient;
  SingularLocus locus;
};

/// 1-form sum_i c_i(u) du_i with analytic coefficient Jacobian
/// jac(i, j) = d c_i / d u_j.
struct OneFormField {
  Chart chart;
  std::function<Vector(const Point&)> coeff;
  std::function<Matrix(const Point&)> jac;
  SingularLocus locus;
};

/// Vector field sum_i v^i(u) d/du_i with analytic Jacobian jac(i, j) = d v^i / d u_j.
struct VectorFieldSpec {
  Chart chart;
  std::function<Vector(const Point&)> comp;
  std::function<Matrix(const Point&)> jac;
  SingularLocus locus;
};

/// (1,1)-tensor field represented by one matrix M per point.
///
/// Vector action:   (K X)^i  = sum_m M(i, m) X^m
/// Covector action: (K* t)_m = sum_i t_i M(i, m), so row i of M is K* du_i.
struct TensorField11 {
  Chart chart;
  std::function<Matrix(const Point&)> mat;
  std::function<MatrixGradient(const Point&)> jac;
  SingularLocus locus;
};

// Constructors for common fields.
OneFormField constant_form(const Chart& chart, const Vector& coeff);
OneFormField coordinate_form(const Chart& chart, std::size_t i);
VectorFieldSpec constant_vector_field(const Chart& chart, const Vector& comp);
VectorFieldSpec coordinate_vector_field(const Chart& chart, std::size_t i);
TensorField11 identity_tensor(const Chart& chart);
TensorField11 constant_tensor(const Chart& chart, const Matrix& m);

/// Exact 1-form df.
OneFormField differential(const ScalarField& f, std::function<Matrix(const Point&)> hessian);

/// Pointwise actions; the results carry analytic Jacobians built with the
/// product rule from the operands' Jacobians.
OneFormField apply_covector(const TensorField11& k, const OneFormField& theta);
VectorFieldSpec apply_vector(const TensorField11& k, const VectorFieldSpec& x);
/// Pointwise product K L (vector convention).
TensorField11 multiply(const TensorField11& k, const TensorField11& l);
/// Pointwise K + s(u) Id.
TensorField11 add_scalar_identity(const TensorField11& k, const ScalarField& s);
/// Pointwise a - b.
OneFormField difference(const OneFormField& a, const OneFormField& b);

/// Central difference step used for all cross-checks: h = 1e-5 * max(1, |u_i|).
double fd_step(double coordinate);

/// Central-difference Jacobian of a vector-valued map, jac(i, j) = d f_i / d u_j.
Matrix fd_jacobian(const std::function<Vector(const Point&)>& f, const Point& p);
MatrixGradient fd_matrix_gradient(const std::function<Matrix(const Point&)>& f, const Point& p);

/// Max-norm of (fd - analytic) scaled by max(1, |analytic|_max).
double fd_mismatch(const OneFormField& w, const Point& p);
double fd_mismatch(const VectorFieldSpec& x, const Point& p);
double fd_mismatch(const TensorField11& k, const Point& p);

}  // namespace lenard
