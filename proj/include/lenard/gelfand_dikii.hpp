#pragma once

// Recursion operator of the dispersionless Gelfand-Dikii system on R^3
// (coordinates w_0, w_1, w_2) and its Lenard complex
//   K_1 = Id, K_2 = K, K_3 = K^2 + w_2 Id, dA = dw_2, X = d/dw_0.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lenard/complex_checks.hpp"
#include "lenard/geometry.hpp"
#include "lenard/parallel.hpp"
#include "lenard/report.hpp"

namespace lenard::gd {

inline const Chart kWChart{"w", 3};

/// Factor c in df(Torsion K) = c dw_2 ^ df for the torsion convention of
/// nijenhuis_tensor; calibrated against the identity.
inline constexpr double kTorsionConventionFactor = 1.0;

/// K* dw_2 = 2 dw_1, K* dw_1 = 2 dw_0 - w_2 dw_2, K* dw_0 = -(1/2) w_1 dw_2.
Matrix gd_operator(const Point& w);
TensorField11 gd_operator_field();

/// Common test functions: coordinates, products.
ScalarField coordinate_function(std::size_t i);
ScalarField constant_shift(const ScalarField& f, double c);
ScalarField product(const ScalarField& f, const ScalarField& g);

/// |df(N_K) - c dw_2 ^ df|_max at w.
double gd_torsion_identity_residual(const ScalarField& f, const Point& w);

struct GdComplex {
  std::array<TensorField11, 3> k;
  OneFormField dA;
  VectorFieldSpec x;
};
GdComplex gd_complex();

namespace cond {
inline constexpr const char* kFieldsCommute = "vector_fields_commute";
inline constexpr const char* kChainClosed = "chain_forms_closed";
inline constexpr const char* kSquareClosed = "square_forms_closed";
inline constexpr const char* kSquareSymmetric = "square_symmetric";
inline constexpr const char* kCommute = "operators_commute";
inline constexpr const char* kHaantjes = "haantjes";
inline constexpr const char* kSymmetryOfK = "lie_X_K";
inline constexpr const char* kJacobianFd = "jacobian_fd";
}  // namespace cond

/// Uniform sample in [-2, 2]^3 (no singular locus).
std::vector<Point> sample_points(std::size_t count, std::uint64_t seed);

/// min(|det(K_j X)|, |det(K_j* dA)|): linear independence of the chains at w.
double chain_independence(const Point& w);

/// Definition checks for the complex plus Haantjes and Lie_X(K) = 0.
VerificationReport verify_gd_complex(std::span<const Point> points, double tol = 1e-8,
                                     double tol_fd = 1e-6, Execution exec = Execution::parallel);

}  // namespace lenard::gd
