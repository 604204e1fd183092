#include "lenard/equivariant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lenard/errors.hpp"
#include "lenard/quadrature.hpp"
#include "lenard/sampling.hpp"

namespace lenard::equivariant {

namespace {

using Index = Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

const Permutation& s12() {
  static const Permutation p = Permutation::transposition(3, 0, 1);
  return p;
}
const Permutation& s13() {
  static const Permutation p = Permutation::transposition(3, 0, 2);
  return p;
}
const Permutation& s23() {
  static const Permutation p = Permutation::transposition(3, 1, 2);
  return p;
}

std::string covector_name(const Vector& l) {
  std::string out = "A.(";
  char buf[32];
  for (Index i = 0; i < l.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%g", i ? "," : "", l(i));
    out += buf;
  }
  return out + ")";
}

double vec_gap(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Regularity predicates of the A-chart family used for sampling.
SingularLocus sampling_locus(const QuadraticInvariant& q) {
  SingularLocus locus;
  const Matrix h = q.hessian();
  for (std::size_t i = 0; i < 3; ++i) {
    const Vector row = h.row(ix(i)).transpose();
    locus.add({"A" + std::to_string(i + 1), [row](const Point& a) { return row.dot(a); }});
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Vector rj = h.row(ix(j)).transpose();
      const auto a_i = ix(i), a_j = ix(j);
      const std::string tag = std::to_string(i + 1) + std::to_string(j + 1);
      locus.add({"a" + tag + "-diff", [a_i, a_j](const Point& a) { return a(a_i) - a(a_j); }});
      locus.add({"A" + tag + "-sum", [row, rj](const Point& a) { return (row + rj).dot(a); }});
      locus.add({"A" + tag + "-diff", [row, rj](const Point& a) { return (row - rj).dot(a); }});
    }
  }
  return locus;
}

std::vector<Point> default_probes() {
  return {(Point(3) << 0.7, 1.3, 2.1).finished(), (Point(3) << 2.9, 0.6, 1.7).finished(),
          (Point(3) << 1.1, 2.4, 0.8).finished(), (Point(3) << 1.9, 2.7, 0.55).finished()};
}

}  // namespace

// --- quadratic invariant -----------------------------------------------------

QuadraticInvariant::QuadraticInvariant(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  const double scale = std::max(1.0, std::abs(alpha) + std::abs(beta));
  if (!std::isfinite(alpha) || !std::isfinite(beta) || std::abs(discriminant()) <= 1e-12 * scale * scale * scale)
    throw InvalidParameter("degenerate quadratic invariant (alpha = " + std::to_string(alpha) +
                           ", beta = " + std::to_string(beta) + "): (α−β)²(2β+α)≠0 violated");
}

double QuadraticInvariant::discriminant() const {
  return (alpha_ - beta_) * (alpha_ - beta_) * (2.0 * beta_ + alpha_);
}

Matrix QuadraticInvariant::hessian() const {
  Matrix h = Matrix::Constant(3, 3, beta_);
  h.diagonal().setConstant(alpha_);
  return h;
}

Matrix QuadraticInvariant::inverse_hessian() const {
  // H = (alpha - beta) I + beta J with J the all-ones matrix.
  const double d = alpha_ - beta_;
  Matrix inv = Matrix::Constant(3, 3, -beta_ / (d * (alpha_ + 2.0 * beta_)));
  inv.diagonal().array() += 1.0 / d;
  return inv;
}

double QuadraticInvariant::value(const Point& a) const {
  return 0.5 * alpha_ * a.squaredNorm() + beta_ * (a(0) * a(1) + a(1) * a(2) + a(2) * a(0));
}

Point QuadraticInvariant::a_to_A(const Point& a) const { return hessian() * a; }
Point QuadraticInvariant::A_to_a(const Point& big_a) const { return inverse_hessian() * big_a; }

Point a_to_A(const QuadraticInvariant& q, const Point& a) { return q.a_to_A(a); }
Point A_to_a(const QuadraticInvariant& q, const Point& big_a) { return q.A_to_a(big_a); }

// --- parameters ----------------------------------------------------------------

void FamilyParams::validate() const {
  if (sigma.size() != eta.size()) throw InvalidParameter("sigma and eta must have the same length");
  for (double e : eta)
    if (e == 0.0) throw InvalidParameter("eta_k must be nonzero");
}

double FamilyParams::sum_rule_c_residual() const {
  double s = 0.0;
  for (double v : sigma) s += v;
  const double a = quad.alpha(), b = quad.beta();
  return 2.0 * s - b / ((b - a) * (2.0 * b + a));
}

double FamilyParams::sum_rule_d_residual() const {
  double s = 0.0;
  for (std::size_t k = 0; k < sigma.size(); ++k) s += sigma[k] / eta[k] + sigma[k] * eta[k];
  const double a = quad.alpha(), b = quad.beta();
  return sigma0 + 2.0 * s - (a + b) / ((a - b) * (2.0 * b + a));
}

FamilyParams FamilyParams::solved(double alpha, double beta, double sigma2) {
  QuadraticInvariant q(alpha, beta);
  const SigmaSolution s = solve_sigma_constraints(alpha, beta, sigma2);
  return {q, s.sigma0, {s.sigma1, sigma2}, {1.0, -1.0}};
}

SigmaSolution solve_sigma_constraints(double alpha, double beta, double sigma2) {
  QuadraticInvariant q(alpha, beta);  // validates
  // eta = (+1, -1): sigma_k/eta_k + sigma_k eta_k = 2 sigma_1, -2 sigma_2.
  const double sigma1 = beta / (2.0 * (beta - alpha) * (2.0 * beta + alpha)) - sigma2;
  const double sigma0 = (alpha + beta) / ((alpha - beta) * (2.0 * beta + alpha)) - 4.0 * sigma1 + 4.0 * sigma2;
  return {sigma1, sigma0};
}

// --- logarithmic forms ------------------------------------------------------------

OneFormField logarithmic_form(const QuadraticInvariant& q, std::span<const LogTerm> terms) {
  const Matrix h = q.hessian();
  std::vector<LogTerm> kept;
  SingularLocus locus;
  for (const auto& t : terms) {
    if (t.weight == 0.0) continue;
    kept.push_back(t);
    const Vector l = t.covector;
    locus.append(SingularLocus({{covector_name(l), [h, l](const Point& a) { return l.dot(h * a); }}}));
  }
  auto coeff = [h, kept](const Point& a) -> Vector {
    const Vector big_a = h * a;
    Vector v = Vector::Zero(3);
    for (const auto& t : kept) v += t.weight * t.covector / t.covector.dot(big_a);
    return h * v;
  };
  auto jac = [h, kept](const Point& a) -> Matrix {
    const Vector big_a = h * a;
    Matrix d = Matrix::Zero(3, 3);
    for (const auto& t : kept) {
      const double s = t.covector.dot(big_a);
      d -= t.weight * t.covector * t.covector.transpose() / (s * s);
    }
    return h * d * h;
  };
  return {kAChart, coeff, jac, locus};
}

OneFormField pivot_form(const QuadraticInvariant& q) {
  const Matrix h = q.hessian();
  return {kAChart, [h](const Point& a) -> Vector { return h * a; }, [h](const Point&) -> Matrix { return h; }, {}};
}

namespace {

Vector lin(double c1, double c2, double c3) { return (Vector(3) << c1, c2, c3).finished(); }

}  // namespace

OneFormField build_dQ(const FamilyParams& params) {
  params.validate();
  std::vector<LogTerm> terms;
  for (std::size_t k = 0; k < params.sigma.size(); ++k) {
    const double s = params.sigma[k], e = params.eta[k];
    terms.push_back({s, lin(1, e, 0)});
    terms.push_back({s, lin(e, 1, 0)});
  }
  return logarithmic_form(params.quad, terms);
}

OneFormField build_dP(const FamilyParams& params) {
  params.validate();
  std::vector<LogTerm> terms{{params.sigma0, lin(1, 0, 0)}};
  for (std::size_t k = 0; k < params.sigma.size(); ++k) {
    const double s = params.sigma[k], e = params.eta[k];
    terms.push_back({s / e, lin(1, e, 0)});
    terms.push_back({s / e, lin(1, 0, e)});
    terms.push_back({s * e, lin(e, 1, 0)});
    terms.push_back({s * e, lin(e, 0, 1)});
  }
  return logarithmic_form(params.quad, terms);
}

// --- square --------------------------------------------------------------------

const OneFormField& EquivariantSquare::entry(std::size_t j, std::size_t l) const {
  if (j > l) std::swap(j, l);
  if (l > 2) throw DimensionMismatch("square index out of range");
  static constexpr OneFormField EquivariantSquare::*table[3][3] = {
      {&EquivariantSquare::dP, &EquivariantSquare::dQ, &EquivariantSquare::dR},
      {nullptr, &EquivariantSquare::dS, &EquivariantSquare::dT},
      {nullptr, nullptr, &EquivariantSquare::dV}};
  return this->*table[j][l];
}

SingularLocus EquivariantSquare::locus() const {
  SingularLocus out;
  for (const OneFormField* w : {&dA, &dQ, &dP, &dR, &dT, &dS, &dV}) out.append(w->locus);
  return out;
}

EquivariantSquare complete_square(const QuadraticInvariant& q, OneFormField dA, OneFormField dP, OneFormField dQ,
                                  std::span<const Point> probes, double tol) {
  SingularLocus locus = dA.locus;
  locus.append(dP.locus);
  locus.append(dQ.locus);
  const OneFormField dA12 = pullback(s12(), dA), dQ12 = pullback(s12(), dQ), dP23 = pullback(s23(), dP);
  std::size_t used = 0;
  for (const Point& p : probes) {
    if (!locus.is_regular(p) || !locus.is_regular(s12().apply(p)) || !locus.is_regular(s23().apply(p))) continue;
    ++used;
    const std::pair<const OneFormField*, const OneFormField*> checks[] = {{&dA12, &dA}, {&dQ12, &dQ}, {&dP23, &dP}};
    const char* names[] = {"s12*(dA) = dA", "s12*(dQ) = dQ", "s23*(dP) = dP"};
    for (std::size_t c = 0; c < 3; ++c) {
      const Vector lhs = checks[c].first->coeff(p), rhs = checks[c].second->coeff(p);
      const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
      if (vec_gap(lhs, rhs) > tol * scale)
        throw InvalidParameter(std::string("symmetry precondition violated: ") + names[c]);
    }
  }
  if (used == 0) throw InvalidParameter("no regular probe point to check the symmetry preconditions");

  EquivariantSquare sq{q, dA, dQ, dP, pullback(s23(), dQ), pullback(s13(), dQ), pullback(s12(), dP),
                       pullback(s13(), dP)};
  return sq;
}

EquivariantSquare complete_square(const QuadraticInvariant& q, OneFormField dA, OneFormField dP, OneFormField dQ) {
  const auto probes = default_probes();
  return complete_square(q, std::move(dA), std::move(dP), std::move(dQ), probes);
}

double square_equivariance_residual(const EquivariantSquare& sq, const Point& p) {
  sq.locus().require_regular(p);
  double worst = 0.0;
  for (const Permutation* s : {&s12(), &s13(), &s23()}) {
    worst = std::max(worst, vec_gap(pullback(*s, sq.dA).coeff(p), sq.dA.coeff(p)));
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = j; l < 3; ++l)
        worst = std::max(worst, vec_gap(pullback(*s, sq.entry(j, l)).coeff(p), sq.entry((*s)(j), (*s)(l)).coeff(p)));
  }
  return worst;
}

// --- complex ---------------------------------------------------------------------

Vector LenardComplex::target_field(std::size_t j) const { return quad().inverse_hessian().col(ix(j)); }

LenardComplex assemble_complex(const FamilyParams& params) {
  params.validate();
  const QuadraticInvariant& q = params.quad;
  EquivariantSquare sq = complete_square(q, pivot_form(q), build_dP(params), build_dQ(params));
  const SingularLocus locus = sq.locus();

  auto make_operator = [&sq, &locus](std::size_t j) -> TensorField11 {
    std::array<OneFormField, 3> rows{sq.entry(j, 0), sq.entry(j, 1), sq.entry(j, 2)};
    auto mat = [rows](const Point& p) -> Matrix {
      Matrix m(3, 3);
      for (std::size_t i = 0; i < 3; ++i) m.row(ix(i)) = rows[i].coeff(p).transpose();
      return m;
    };
    auto jac = [rows](const Point& p) -> MatrixGradient {
      MatrixGradient d(3, Matrix(3, 3));
      for (std::size_t i = 0; i < 3; ++i) {
        const Matrix ji = rows[i].jac(p);
        for (std::size_t c = 0; c < 3; ++c) d[c].row(ix(i)) = ji.col(ix(c)).transpose();
      }
      return d;
    };
    return {kAChart, mat, jac, locus};
  };

  const Matrix h = q.hessian(), hinv = q.inverse_hessian();
  VectorFieldSpec x{kAChart, [q](const Point& a) -> Vector { return q.A_to_a(q.a_to_A(a)); },
                    [h, hinv](const Point&) -> Matrix { return hinv * h; }, {}};

  std::array<TensorField11, 3> ops{make_operator(0), make_operator(1), make_operator(2)};
  OneFormField dA = sq.dA;
  return LenardComplex{params, std::move(sq), std::move(ops), std::move(dA), std::move(x)};
}

// --- constraint functions -------------------------------------------------------------

double phi(double alpha, double beta, double sigma2) {
  QuadraticInvariant q(alpha, beta);
  const double a = alpha, b = beta, s = sigma2;
  const double f1 = 2 * a * b * s + 2 * a * a * s - 4 * b * b * s + b;
  const double f2 = 8 * a * b * s + 8 * a * a * s - 16 * b * b * s + a + 3 * b;
  const double den = (a - b) * (a - b) * (2 * b + a) * (2 * b + a);
  return 2 * b * f1 * f2 / den;
}

double psi(const Point& big_a) {
  const double a1 = big_a(0), a2 = big_a(1), a3 = big_a(2);
  const double den = (a1 + a2) * (a2 + a3) * (a3 + a1);
  if (den == 0.0 || !std::isfinite(den)) throw SingularPointError("Psi has a pole: A_i + A_j = 0");
  return (a1 * a2 + a2 * a3 + a3 * a1) / den;
}

PhiRoots solve_phi_roots(double alpha, double beta) {
  QuadraticInvariant q(alpha, beta);
  if (beta == 0.0)
    throw InvalidParameter("beta = 0: Phi vanishes identically, every sigma_2 satisfies the symmetry constraint");
  const double base = (alpha - beta) * (alpha + 2.0 * beta);
  const PhiRoots roots{-beta / (2.0 * base), -(alpha + 3.0 * beta) / (8.0 * base)};
  const double scale = std::max(1.0, std::abs(phi(alpha, beta, 0.0)));
  for (double r : {roots.root1, roots.root2})
    if (std::abs(phi(alpha, beta, r)) > 1e-12 * scale) throw Error("Phi root check failed");
  return roots;
}

OneFormField k3_dq(const LenardComplex& c) { return apply_covector(c.k[2], c.square.dQ); }

namespace {

Vector split_difference(const OneFormField& k3dq, const Point& p) {
  return pullback(s23(), k3dq).coeff(p) - k3dq.coeff(p);
}

}  // namespace

double symmetry_constraint_residual(const LenardComplex& c, const Point& p) {
  c.locus().require_regular(p);
  return split_difference(k3_dq(c), p).cwiseAbs().maxCoeff();
}

double split_form_residual(const LenardComplex& c, const Point& p) {
  const auto& prm = c.params;
  if (prm.eta.size() != 2 || prm.eta[0] != 1.0 || prm.eta[1] != -1.0)
    throw InvalidParameter("the split form holds for the m = 2 family with eta = (+1, -1)");
  c.locus().require_regular(p);
  const Matrix h = c.quad().hessian();
  const Point big_a = h * p;
  const Vector lhs = split_difference(k3_dq(c), p);
  const Vector direction = h.row(2).transpose() / big_a(2) - h.row(1).transpose() / big_a(1);
  const Vector rhs = phi(c.quad().alpha(), c.quad().beta(), prm.sigma[1]) * psi(big_a) * direction;
  return vec_gap(lhs, rhs);
}

double split_form_residual(const FamilyParams& params, const Point& p) {
  return split_form_residual(assemble_complex(params), p);
}

// --- potentials ---------------------------------------------------------------------

Tensor3 structure_constants(const LenardComplex& c, const Point& p) {
  c.locus().require_regular(p);
  const Vector x = c.x.comp(p);
  std::array<Vector, 3> xm;
  for (std::size_t m = 0; m < 3; ++m) xm[m] = c.k[m].mat(p) * x;
  Tensor3 out(3, Matrix::Zero(3, 3));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t l = 0; l < 3; ++l) {
      const Vector theta = c.square.entry(j, l).coeff(p);
      for (std::size_t m = 0; m < 3; ++m) out[j](ix(l), ix(m)) = theta.dot(xm[m]);
    }
  return out;
}

double wdvv_residual_of_complex(const LenardComplex& c, const Point& p, double chain_tol) {
  c.locus().require_regular(p);
  const Vector x = c.x.comp(p);
  for (std::size_t m = 0; m < 3; ++m) {
    const Vector target = c.target_field(m);
    if (vec_gap(c.k[m].mat(p) * x, target) > chain_tol * std::max(1.0, target.cwiseAbs().maxCoeff()))
      throw Error("condition II fails at this point: the x-chart cannot be identified with the A-chart");
  }
  const Tensor3 t = structure_constants(c, p);
  return wdvv::commutation_residual(t, t[0], "dh/dx_1 of the complex potential is singular");
}

double reconstruct_potential_entry(const EquivariantSquare& sq, std::size_t j, std::size_t l, const Point& x_from,
                                   const Point& x_to, double tol) {
  const OneFormField& theta = sq.entry(j, l);
  const QuadraticInvariant q = sq.quad;
  const Matrix hinv = q.inverse_hessian();
  const SingularLocus a_locus = sq.locus();
  SingularLocus locus;
  for (const auto& pr : a_locus.predicates()) {
    auto eval = pr.eval;
    locus.add({pr.name, [eval, hinv](const Point& x) { return eval(hinv * x); }});
  }
  static const Chart x_chart{"x", 3};
  OneFormField in_x{x_chart, [theta, hinv](const Point& x) -> Vector { return hinv * theta.coeff(hinv * x); },
                    [theta, hinv](const Point& x) -> Matrix { return hinv * theta.jac(hinv * x) * hinv; }, locus};
  return line_integral(in_x, x_from, x_to, tol);
}

std::vector<Point> sample_points(const LenardComplex& c, std::size_t count, std::uint64_t seed) {
  Sampler sampler(seed);
  SamplingDomain domain;
  domain.locus = c.locus();
  domain.locus.append(sampling_locus(c.quad()));
  return sample_regular(sampler, domain, count);
}

// --- verification ----------------------------------------------------------------------

VerificationReport verify_complex(const LenardComplex& c, std::span<const Point> points, const Tolerances& tol,
                                  Execution exec) {
  const DefinitionChecker checker({c.k[0], c.k[1], c.k[2]}, c.dA, c.x);
  const OneFormField k3dq = k3_dq(c);
  const Matrix hinv = c.quad().inverse_hessian();
  const std::array<const OneFormField*, 7> seven{&c.square.dA, &c.square.dQ, &c.square.dP, &c.square.dR,
                                                 &c.square.dT, &c.square.dS, &c.square.dV};
  constexpr std::size_t kWidth = 15;

  auto kernel = [&](const Point& p) {
    c.locus().require_regular(p);
    std::vector<double> r(kWidth, 0.0);
    const DefinitionResiduals d = checker.residuals(p);
    const Vector x = c.x.comp(p);
    const Vector big_a = c.quad().a_to_A(p);
    Matrix sum = Matrix::Zero(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      const Matrix kj = c.k[j].mat(p);
      r[0] = std::max(r[0], vec_gap(checker.chain_forms()[j].coeff(p), Vector::Unit(3, ix(j))));
      r[1] = std::max(r[1], vec_gap(kj * x, hinv.col(ix(j))));
      for (std::size_t l = 0; l < 3; ++l)
        r[2] = std::max(r[2], vec_gap(checker.square(j, l).coeff(p), c.square.entry(j, l).coeff(p)));
      sum += big_a(ix(j)) * kj;
    }
    r[3] = d.vector_fields_commute;
    r[4] = d.chain_closed;
    r[5] = d.square_closed;
    for (const OneFormField* w : seven) r[6] = std::max(r[6], closure_residual(*w, p));
    r[7] = d.square_symmetric;
    r[8] = d.operators_commute;
    r[9] = split_difference(k3dq, p).cwiseAbs().maxCoeff();
    r[10] = square_equivariance_residual(c.square, p);
    r[11] = max_abs(sum - Matrix::Identity(3, 3));
    r[12] = d.third_symmetry;
    r[13] = d.haantjes;
    double fd = d.fd_mismatch;
    for (const OneFormField* w : seven) fd = std::max(fd, fd_mismatch(*w, p));
    r[14] = fd;
    return r;
  };
  const auto worst = max_reduce(points, kWidth, kernel, exec);

  VerificationReport report;
  const std::size_t n = points.size();
  report.add(cond::kChainForms, n, worst[0], tol.analytic);
  report.add(cond::kChainFields, n, worst[1], tol.analytic);
  report.add(cond::kSquareMatches, n, worst[2], tol.analytic);
  report.add(cond::kFieldsCommute, n, worst[3], tol.analytic);
  report.add(cond::kChainClosed, n, worst[4], tol.analytic);
  report.add(cond::kSquareClosed, n, worst[5], tol.analytic);
  report.add(cond::kSevenClosed, n, worst[6], tol.analytic);
  report.add(cond::kSquareSymmetric, n, worst[7], tol.analytic);
  report.add(cond::kCommute, n, worst[8], tol.analytic);
  report.add(cond::kSymmetry, n, worst[9], tol.analytic);
  report.add(cond::kEquivariance, n, worst[10], tol.analytic);
  report.add(cond::kIdentity, n, worst[11], tol.analytic);
  report.add(cond::kThirdSymmetry, n, worst[12], tol.analytic);
  report.add(cond::kHaantjes, n, worst[13], tol.analytic);
  report.add(cond::kJacobianFd, n, worst[14], tol.fd);
  return report;
}

}  // namespace lenard::equivariant
