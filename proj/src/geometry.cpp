#include "lenard/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "lenard/errors.hpp"

namespace lenard {

namespace {

using Index = Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

void require_dim(const Chart& chart, std::size_t dim, const char* what) {
  if (chart.dim != dim) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

void require_point(const Chart& chart, const Point& p) {
  if (static_cast<std::size_t>(p.size()) != chart.dim) throw DimensionMismatch("point has wrong dimension for chart '" + chart.name + "'");
}

/// Locus of a field composed with a point map u -> g(u).
SingularLocus composed(const SingularLocus& locus, const std::function<Point(const Point&)>& g,
                       const std::string& tag) {
  SingularLocus out;
  for (const auto& q : locus.predicates()) {
    auto eval = q.eval;
    out.add({q.name + tag, [eval, g](const Point& u) { return eval(g(u)); }});
  }
  return out;
}

std::string tag_of(const Permutation& s) {
  std::string t = "@perm(";
  for (std::size_t i = 0; i < s.dim(); ++i) t += (i ? "," : "") + std::to_string(s(i));
  return t + ")";
}

}  // namespace

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const Tensor3& t) {
  double worst = 0.0;
  for (const auto& s : t) worst = std::max(worst, max_abs(s));
  return worst;
}

double closure_residual(const OneFormField& w, const Point& p) {
  require_point(w.chart, p);
  w.locus.require_regular(p);
  const Matrix j = w.jac(p);
  double worst = 0.0;
  for (Index a = 0; a < j.rows(); ++a)
    for (Index b = a + 1; b < j.cols(); ++b) worst = std::max(worst, std::abs(j(a, b) - j(b, a)));
  return worst;
}

OneFormField pullback(const Permutation& s, const OneFormField& w) {
  require_dim(w.chart, s.dim(), "pullback");
  auto coeff = [s, w](const Point& u) -> Vector {
    const Vector c = w.coeff(s.apply(u));
    Vector out(c.size());
    for (std::size_t i = 0; i < s.dim(); ++i) out(ix(i)) = c(ix(s(i)));
    return out;
  };
  auto jac = [s, w](const Point& u) -> Matrix {
    const Matrix j = w.jac(s.apply(u));
    Matrix out(j.rows(), j.cols());
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = 0; b < s.dim(); ++b) out(ix(a), ix(b)) = j(ix(s(a)), ix(s(b)));
    return out;
  };
  auto move = [s](const Point& u) { return s.apply(u); };
  return {w.chart, coeff, jac, composed(w.locus, move, tag_of(s))};
}

VectorFieldSpec pushforward(const Permutation& s, const VectorFieldSpec& x) {
  require_dim(x.chart, s.dim(), "pushforward");
  const Permutation inv = s.inverse();
  auto comp = [inv, x](const Point& u) -> Vector {
    const Vector v = x.comp(inv.apply(u));
    Vector out(v.size());
    for (std::size_t i = 0; i < inv.dim(); ++i) out(ix(i)) = v(ix(inv(i)));
    return out;
  };
  auto jac = [inv, x](const Point& u) -> Matrix {
    const Matrix j = x.jac(inv.apply(u));
    Matrix out(j.rows(), j.cols());
    for (std::size_t a = 0; a < inv.dim(); ++a)
      for (std::size_t b = 0; b < inv.dim(); ++b) out(ix(a), ix(b)) = j(ix(inv(a)), ix(inv(b)));
    return out;
  };
  auto move = [inv](const Point& u) { return inv.apply(u); };
  return {x.chart, comp, jac, composed(x.locus, move, tag_of(inv))};
}

TensorField11 transform(const Permutation& s, const TensorField11& k) {
  require_dim(k.chart, s.dim(), "transform");
  const Permutation inv = s.inverse();
  auto permuted = [inv](const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t a = 0; a < inv.dim(); ++a)
      for (std::size_t b = 0; b < inv.dim(); ++b) out(ix(a), ix(b)) = m(ix(inv(a)), ix(inv(b)));
    return out;
  };
  auto mat = [inv, k, permuted](const Point& u) -> Matrix { return permuted(k.mat(inv.apply(u))); };
  auto jac = [inv, k, permuted](const Point& u) -> MatrixGradient {
    const MatrixGradient d = k.jac(inv.apply(u));
    MatrixGradient out(d.size());
    for (std::size_t c = 0; c < d.size(); ++c) out[c] = permuted(d[inv(c)]);
    return out;
  };
  auto move = [inv](const Point& u) { return inv.apply(u); };
  return {k.chart, mat, jac, composed(k.locus, move, tag_of(inv))};
}

double commutator_residual(const TensorField11& k, const TensorField11& l, const Point& p) {
  if (!(k.chart == l.chart)) throw DimensionMismatch("commutator of tensors on different charts");
  require_point(k.chart, p);
  k.locus.require_regular(p);
  l.locus.require_regular(p);
  const Matrix mk = k.mat(p), ml = l.mat(p);
  return max_abs(mk * ml - ml * mk);
}

Vector lie_bracket(const VectorFieldSpec& x, const VectorFieldSpec& y, const Point& p) {
  if (!(x.chart == y.chart)) throw DimensionMismatch("bracket of fields on different charts");
  require_point(x.chart, p);
  x.locus.require_regular(p);
  y.locus.require_regular(p);
  return y.jac(p) * x.comp(p) - x.jac(p) * y.comp(p);
}

double lie_bracket_residual(const VectorFieldSpec& x, const VectorFieldSpec& y, const Point& p) {
  return lie_bracket(x, y, p).cwiseAbs().maxCoeff();
}

Tensor3 nijenhuis_tensor(const TensorField11& k, const Point& p) {
  require_point(k.chart, p);
  k.locus.require_regular(p);
  const Matrix m = k.mat(p);
  const MatrixGradient dm = k.jac(p);
  const Index n = m.rows();
  Tensor3 out(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        double v = 0.0;
        for (Index c = 0; c < n; ++c) {
          const auto cc = static_cast<std::size_t>(c);
          v += m(c, a) * dm[cc](i, b) - m(c, b) * dm[cc](i, a);
          v += m(i, c) * (dm[static_cast<std::size_t>(b)](c, a) - dm[static_cast<std::size_t>(a)](c, b));
        }
        out[static_cast<std::size_t>(i)](a, b) = v;
      }
  return out;
}

Matrix nijenhuis_contracted(const TensorField11& k, const ScalarField& f, const Point& p) {
  if (!(k.chart == f.chart)) throw DimensionMismatch("torsion contraction on different charts");
  f.locus.require_regular(p);
  const Tensor3 nt = nijenhuis_tensor(k, p);
  const Vector g = f.gradient(p);
  Matrix out = Matrix::Zero(g.size(), g.size());
  for (std::size_t i = 0; i < nt.size(); ++i) out += g(ix(i)) * nt[i];
  return out;
}

Tensor3 haantjes_tensor(const TensorField11& k, const Point& p) {
  const Tensor3 nt = nijenhuis_tensor(k, p);
  const Matrix m = k.mat(p);
  const Matrix m2 = m * m;
  const Index n = m.rows();
  const auto un = static_cast<std::size_t>(n);

  // Slices of the mixed terms, indexed by the output component.
  // nkk[i] = M^T N^i M,  nk1[i](a,b) = sum_c M(c,a) N^i(c,b),  n1k[i] = N^i M.
  Tensor3 nkk(un), nk1(un), n1k(un);
  for (std::size_t i = 0; i < un; ++i) {
    nkk[i] = m.transpose() * nt[i] * m;
    nk1[i] = m.transpose() * nt[i];
    n1k[i] = nt[i] * m;
  }
  Tensor3 out(un, Matrix::Zero(n, n));
  for (std::size_t i = 0; i < un; ++i) {
    out[i] = nkk[i];
    for (std::size_t c = 0; c < un; ++c) {
      out[i] += m2(ix(i), ix(c)) * nt[c];
      out[i] -= m(ix(i), ix(c)) * (nk1[c] + n1k[c]);
    }
  }
  return out;
}

double haantjes_residual(const TensorField11& k, const Point& p) { return max_abs(haantjes_tensor(k, p)); }

Matrix wedge(const Vector& u, const Vector& v) { return u * v.transpose() - v * u.transpose(); }

}  // namespace lenard

namespace lenard {

double total_symmetry_residual(const Tensor3& t) {
  const std::size_t n = t.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m) {
        const double v = t[j](static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m));
        const double others[] = {
            t[j](static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(l)),
            t[l](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m)),
            t[m](static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j)),
        };
        for (double o : others) worst = std::max(worst, std::abs(v - o));
      }
  return worst;
}

}  // namespace lenard

namespace lenard {

Matrix lie_derivative(const TensorField11& k, const VectorFieldSpec& x, const Point& p) {
  if (!(k.chart == x.chart)) throw DimensionMismatch("Lie derivative on different charts");
  k.locus.require_regular(p);
  x.locus.require_regular(p);
  const Matrix m = k.mat(p);
  const Matrix dx = x.jac(p);
  const Vector v = x.comp(p);
  const MatrixGradient dm = k.jac(p);
  Matrix out = -dx * m + m * dx;
  for (std::size_t c = 0; c < dm.size(); ++c) out += v(static_cast<Eigen::Index>(c)) * dm[c];
  return out;
}

}  // namespace lenard
