#include "lenard/complex_checks.hpp"

#include <algorithm>

#include "lenard/errors.hpp"
#include "lenard/geometry.hpp"

namespace lenard {

DefinitionChecker::DefinitionChecker(std::vector<TensorField11> ops, OneFormField da, VectorFieldSpec x)
    : ops_(std::move(ops)), da_(std::move(da)), x_(std::move(x)) {
  if (ops_.empty()) throw InvalidParameter("a complex needs at least one recursion operator");
  for (const auto& k : ops_) {
    chain_.push_back(apply_covector(k, da_));
    fields_.push_back(apply_vector(k, x_));
  }
  for (const auto& kj : ops_)
    for (const auto& theta_l : chain_) square_.push_back(apply_covector(kj, theta_l));
}

DefinitionResiduals DefinitionChecker::residuals(const Point& p) const {
  const std::size_t n = ops_.size();
  DefinitionResiduals r;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = j + 1; l < n; ++l) {
      r.operators_commute = std::max(r.operators_commute, commutator_residual(ops_[j], ops_[l], p));
      r.vector_fields_commute = std::max(r.vector_fields_commute, lie_bracket_residual(fields_[j], fields_[l], p));
      r.square_symmetric =
          std::max(r.square_symmetric, (square(j, l).coeff(p) - square(l, j).coeff(p)).cwiseAbs().maxCoeff());
    }
    r.chain_closed = std::max(r.chain_closed, closure_residual(chain_[j], p));
    for (std::size_t l = 0; l < n; ++l) r.square_closed = std::max(r.square_closed, closure_residual(square(j, l), p));
    r.haantjes = std::max(r.haantjes, haantjes_residual(ops_[j], p));
  }

  // c[j](l, m) = (K_j* K_l* dA)(K_m X)
  std::vector<Vector> xs;
  for (const auto& f : fields_) xs.push_back(f.comp(p));
  const auto dim = static_cast<Eigen::Index>(n);
  Tensor3 c(n, Matrix::Zero(dim, dim));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      const Vector theta = square(j, l).coeff(p);
      for (std::size_t m = 0; m < n; ++m)
        c[j](static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) = theta.dot(xs[m]);
    }
  r.third_symmetry = total_symmetry_residual(c);

  double fd = std::max(fd_mismatch(da_, p), fd_mismatch(x_, p));
  for (const auto& k : ops_) fd = std::max(fd, fd_mismatch(k, p));
  for (const auto& w : chain_) fd = std::max(fd, fd_mismatch(w, p));
  for (const auto& f : fields_) fd = std::max(fd, fd_mismatch(f, p));
  for (const auto& w : square_) fd = std::max(fd, fd_mismatch(w, p));
  r.fd_mismatch = fd;
  return r;
}

}  // namespace lenard
