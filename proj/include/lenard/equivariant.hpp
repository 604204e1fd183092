#pragma once

// S3-equivariant Lenard complexes on R^3 built from logarithmic 1-forms.
//
// Coordinates: the a-chart (a_1, a_2, a_3) and the A-chart A = H a, where H
// is the Hessian of the invariant quadratic
//   A(a) = alpha/2 (a_1^2 + a_2^2 + a_3^2) + beta (a_1 a_2 + a_2 a_3 + a_3 a_1).
// All fields are stored in the a-chart. Indices are 0-based in code.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lenard/complex_checks.hpp"
#include "lenard/geometry.hpp"
#include "lenard/parallel.hpp"
#include "lenard/report.hpp"
#include "lenard/wdvv.hpp"

namespace lenard::equivariant {

inline const Chart kAChart{"a", 3};

class QuadraticInvariant {
 public:
  /// Throws InvalidParameter unless (alpha - beta)^2 (2 beta + alpha) != 0.
  QuadraticInvariant(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// (alpha - beta)^2 (2 beta + alpha)
  double discriminant() const;
  /// Hessian of A: alpha on the diagonal, beta off it.
  Matrix hessian() const;
  Matrix inverse_hessian() const;

  double value(const Point& a) const;

  Point a_to_A(const Point& a) const;
  Point A_to_a(const Point& big_a) const;

 private:
  double alpha_;
  double beta_;
};

/// Parameters (sigma_0, sigma_k, eta_k) of the logarithmic family.
struct FamilyParams {
  QuadraticInvariant quad;
  double sigma0 = 0;
  std::vector<double> sigma;
  std::vector<double> eta;

  /// Throws InvalidParameter on size mismatch or eta_k == 0.
  void validate() const;
  /// 2 sum sigma_k - beta / ((beta - alpha)(2 beta + alpha))
  double sum_rule_c_residual() const;
  /// sigma_0 + 2 sum (sigma_k/eta_k + sigma_k eta_k) - (alpha + beta) / ((alpha - beta)(2 beta + alpha))
  double sum_rule_d_residual() const;

  /// The solved m = 2 family with eta = (+1, -1); sigma_1, sigma_0 from the sum rules.
  static FamilyParams solved(double alpha, double beta, double sigma2);
};

Point a_to_A(const QuadraticInvariant& q, const Point& a);
Point A_to_a(const QuadraticInvariant& q, const Point& big_a);

/// Weighted logarithmic differential w d(l.A)/(l.A) with l a fixed covector in
/// the A-chart.
struct LogTerm {
  double weight;
  Vector covector;  // l
};

/// Sum of log terms, converted to an a-chart OneFormField with analytic
/// Jacobian and one singular predicate l.A per term.
OneFormField logarithmic_form(const QuadraticInvariant& q, std::span<const LogTerm> terms);

/// dA = sum_i A_i da_i.
OneFormField pivot_form(const QuadraticInvariant& q);
OneFormField build_dQ(const FamilyParams& params);
OneFormField build_dP(const FamilyParams& params);

/// The seven 1-forms of an equivariant square in the a-chart.
struct EquivariantSquare {
  QuadraticInvariant quad;
  OneFormField dA, dQ, dP, dR, dT, dS, dV;

  /// theta_{jl}: (0,0)=dP (0,1)=dQ (0,2)=dR (1,1)=dS (1,2)=dT (2,2)=dV.
  const OneFormField& entry(std::size_t j, std::size_t l) const;
  /// Union of the loci of all seven forms.
  SingularLocus locus() const;
};

/// Completes the square by equivariance:
///   dR = s23*(dQ), dT = s13*(dQ), dS = s12*(dP), dV = s13*(dP).
/// The inputs must satisfy s12*(dA) = dA, s12*(dQ) = dQ, s23*(dP) = dP; this is
/// checked at `probes` (regular probes only) and InvalidParameter is thrown on
/// violation beyond `tol`.
EquivariantSquare complete_square(const QuadraticInvariant& q, OneFormField dA, OneFormField dP,
                                  OneFormField dQ, std::span<const Point> probes, double tol = 1e-9);
EquivariantSquare complete_square(const QuadraticInvariant& q, OneFormField dA, OneFormField dP,
                                  OneFormField dQ);

/// Max residual of the table identities sigma*(theta_{jl}) = theta_{sigma(j) sigma(l)}
/// (and sigma*(dA) = dA) for all three transpositions at p.
double square_equivariance_residual(const EquivariantSquare& sq, const Point& p);

struct LenardComplex {
  FamilyParams params;
  EquivariantSquare square;
  std::array<TensorField11, 3> k;
  OneFormField dA;
  VectorFieldSpec x;  // sum A_i d/dA_i expressed in the a-chart

  const QuadraticInvariant& quad() const { return params.quad; }
  /// X_j = d/dA_j in a-components: column j of H^-1.
  Vector target_field(std::size_t j) const;
  SingularLocus locus() const { return square.locus(); }
};

/// Recursion operators from the square: row i of K_j is theta_{ji}.
LenardComplex assemble_complex(const FamilyParams& params);

/// sigma_1, sigma_0 for m = 2, eta = (+1, -1).
struct SigmaSolution {
  double sigma1;
  double sigma0;
};
SigmaSolution solve_sigma_constraints(double alpha, double beta, double sigma2);

double phi(double alpha, double beta, double sigma2);
/// (A1 A2 + A2 A3 + A3 A1) / ((A1 + A2)(A2 + A3)(A3 + A1)); throws on a pole.
double psi(const Point& big_a);

struct PhiRoots {
  double root1;  // zero of the first sigma_2-linear factor
  double root2;  // zero of the second sigma_2-linear factor
};
/// Throws InvalidParameter for beta == 0 (Phi vanishes identically).
PhiRoots solve_phi_roots(double alpha, double beta);

/// |s23*(K_3* dQ) - K_3* dQ|_max at p.
double symmetry_constraint_residual(const LenardComplex& c, const Point& p);
/// |[s23*(K_3* dQ) - K_3* dQ] - Phi Psi (dA_3/A_3 - dA_2/A_2)|_max at p.
double split_form_residual(const LenardComplex& c, const Point& p);
double split_form_residual(const FamilyParams& params, const Point& p);

/// 1-form K_3* dQ with analytic Jacobian.
OneFormField k3_dq(const LenardComplex& c);

/// c[j](l, m) = theta_{jl}(K_m X), the third derivatives of the potential in
/// the x-chart (= A-chart once K_j X = d/dA_j holds).
Tensor3 structure_constants(const LenardComplex& c, const Point& p);

/// Ordinary WDVV residual of the potential defined by the complex. Throws
/// Error if condition II fails at p beyond `chain_tol`.
double wdvv_residual_of_complex(const LenardComplex& c, const Point& p, double chain_tol = 1e-9);

/// A_{jl}(x_to) - A_{jl}(x_from), integrating theta_{jl} along the straight
/// segment in the A-chart.
double reconstruct_potential_entry(const EquivariantSquare& sq, std::size_t j, std::size_t l,
                                   const Point& x_from, const Point& x_to, double tol = 1e-10);

/// Regular sample in the a-chart: [0.5, 3]^3, gaps >= 0.05, margins 1e-3.
std::vector<Point> sample_points(const LenardComplex& c, std::size_t count, std::uint64_t seed);

/// Condition names used in verification reports.
namespace cond {
inline constexpr const char* kChainForms = "I.chain_of_forms";
inline constexpr const char* kChainFields = "II.chain_of_vector_fields";
inline constexpr const char* kFieldsCommute = "II.vector_fields_commute";
inline constexpr const char* kChainClosed = "III.chain_forms_closed";
inline constexpr const char* kSquareMatches = "III.square_matches_table";
inline constexpr const char* kSquareClosed = "III.square_closed";
inline constexpr const char* kSevenClosed = "III.seven_forms_closed";
inline constexpr const char* kSquareSymmetric = "III.square_symmetric";
inline constexpr const char* kCommute = "IV.operators_commute";
inline constexpr const char* kSymmetry = "symmetry_constraint";
inline constexpr const char* kEquivariance = "square_equivariance";
inline constexpr const char* kIdentity = "A1K1+A2K2+A3K3=Id";
inline constexpr const char* kThirdSymmetry = "third_derivative_symmetry";
inline constexpr const char* kHaantjes = "haantjes";
inline constexpr const char* kJacobianFd = "jacobian_fd";
}  // namespace cond

VerificationReport verify_complex(const LenardComplex& c, std::span<const Point> points,
                                  const Tolerances& tol = {}, Execution exec = Execution::parallel);

/// Parameters and reference potential of the simplest Veselov-type complex:
/// alpha = 2, beta = 1, eta = (+1, -1), sigma_2 = -1/8, sigma_1 = 0, sigma_0 = 1/4,
/// F = (1/16) [sum (x_i - x_j)^2 log (x_i - x_j)^2 + sum x_i^2 log x_i^2].
struct Example3 {
  FamilyParams params;
  wdvv::VeselovPotential reference;
};
Example3 example3_fixture();

/// Hand-written closed-form coefficients of the alpha = 2, beta = 1 example in
/// the a-chart, independent of the construction. dP's da_1 numerator uses
/// -2 a_1 a_3; the dP_literal variant with -2 a_2 a_3 breaks the s23 symmetry
/// dP must have. dV_literal is a known-inconsistent variant kept as a control.
namespace closed_forms {
Vector dA(const Point& a);
Vector dQ(const Point& a);
Vector dR(const Point& a);
Vector dT(const Point& a);
Vector dP(const Point& a);
Vector dP_literal(const Point& a);
Vector dS(const Point& a);
Vector dV_literal(const Point& a);
/// Rows of H^-1 for alpha = 2, beta = 1: (3,-1,-1)/4 and permutations.
Vector chain_field(std::size_t j);
}  // namespace closed_forms

}  // namespace lenard::equivariant
