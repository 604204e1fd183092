#pragma once

#include <vector>

#include "lenard/fields.hpp"

namespace lenard {

/// Rank-3 array stored as slices: t[i](a, b).
using Tensor3 = std::vector<Matrix>;

/// max_{i<j} |d c_i/d u_j - d c_j/d u_i|; zero iff the form is closed at p.
double closure_residual(const OneFormField& w, const Point& p);

/// Pull-back by the coordinate permutation: c'_i(u) = c_{s(i)}(s . u).
OneFormField pullback(const Permutation& s, const OneFormField& w);
/// Push-forward: v'^i(u) = v^{s^-1(i)}(s^-1 . u).
VectorFieldSpec pushforward(const Permutation& s, const VectorFieldSpec& x);
/// Push-forward of a (1,1)-tensor: M'(u)(i, k) = M(s^-1 . u)(s^-1(i), s^-1(k)).
TensorField11 transform(const Permutation& s, const TensorField11& k);

/// Max-norm of K L - L K at p.
double commutator_residual(const TensorField11& k, const TensorField11& l, const Point& p);

/// [X, Y] = (DY) X - (DX) Y.
Vector lie_bracket(const VectorFieldSpec& x, const VectorFieldSpec& y, const Point& p);
double lie_bracket_residual(const VectorFieldSpec& x, const VectorFieldSpec& y, const Point& p);

/// Lie derivative of a (1,1)-tensor: sum_k X^k dM/du_k - (DX) M + M (DX).
Matrix lie_derivative(const TensorField11& k, const VectorFieldSpec& x, const Point& p);

/// Nijenhuis torsion on coordinate pairs, n[i](a, b) = N_K(e_a, e_b)^i with
/// N_K(X,Y) = K^2[X,Y] + [KX,KY] - K[KX,Y] - K[X,KY].
Tensor3 nijenhuis_tensor(const TensorField11& k, const Point& p);

/// Scalar 2-form df(N_K(., .)) on coordinate pairs (antisymmetric matrix).
Matrix nijenhuis_contracted(const TensorField11& k, const ScalarField& f, const Point& p);

/// Haantjes torsion H_K(X,Y) = K^2 N(X,Y) + N(KX,KY) - K(N(KX,Y) + N(X,KY)).
Tensor3 haantjes_tensor(const TensorField11& k, const Point& p);
/// Max over coordinate pairs of |H_K(e_a, e_b)|.
double haantjes_residual(const TensorField11& k, const Point& p);

/// Max |t[j](l,m) - t[pi(j)](pi(l),pi(m))| over all index permutations pi.
double total_symmetry_residual(const Tensor3& t);

/// Matrix of the 2-form u ^ v on coordinate pairs: (u ^ v)(e_a, e_b) = u_a v_b - u_b v_a.
Matrix wedge(const Vector& u, const Vector& v);

double max_abs(const Matrix& m);
double max_abs(const Tensor3& t);

}  // namespace lenard
