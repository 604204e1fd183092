#pragma once

#include <array>
#include <vector>

#include "lenard/fields.hpp"

namespace lenard {

/// Residuals of the defining conditions of a Lenard complex at one point.
struct DefinitionResiduals {
  double operators_commute = 0;      // K_j K_l - K_l K_j
  double vector_fields_commute = 0;  // [K_j X, K_l X]
  double chain_closed = 0;           // d(K_j* dA)
  double square_closed = 0;          // d(K_j* K_l* dA)
  double square_symmetric = 0;       // K_j* K_l* dA - K_l* K_j* dA
  double third_symmetry = 0;         // dA(K_j K_l K_m X) under index permutations
  double haantjes = 0;               // Haantjes torsion of every K_j
  double fd_mismatch = 0;            // analytic vs central-difference Jacobians
};

/// Builds the iterated chains and the square once, then evaluates the
/// defining conditions pointwise. All derived fields keep analytic Jacobians.
class DefinitionChecker {
 public:
  DefinitionChecker(std::vector<TensorField11> ops, OneFormField da, VectorFieldSpec x);

  DefinitionResiduals residuals(const Point& p) const;

  const std::vector<TensorField11>& ops() const { return ops_; }
  /// K_j* dA
  const std::vector<OneFormField>& chain_forms() const { return chain_; }
  /// K_j X
  const std::vector<VectorFieldSpec>& chain_fields() const { return fields_; }
  /// square(j, l) = K_j* K_l* dA
  const OneFormField& square(std::size_t j, std::size_t l) const { return square_[j * ops_.size() + l]; }

 private:
  std::vector<TensorField11> ops_;
  OneFormField da_;
  VectorFieldSpec x_;
  std::vector<OneFormField> chain_;
  std::vector<VectorFieldSpec> fields_;
  std::vector<OneFormField> square_;
};

}  // namespace lenard
