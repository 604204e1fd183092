#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lenard {

using Point = Eigen::VectorXd;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Named coordinate chart of fixed dimension (dim >= 2).
struct Chart {
  std::string name;
  std::size_t dim = 0;

  Chart(std::string name_, std::size_t dim_);
};

inline bool operator==(const Chart& a, const Chart& b) {
  return a.name == b.name && a.dim == b.dim;
}

/// Default margin a regularity predicate must clear at an accepted point.
inline constexpr double kRegularityMargin = 1e-3;

/// Signed scalar function whose zero set is part of a singular locus.
struct SingularPredicate {
  std::string name;
  std::function<double(const Point&)> eval;
};

/// The union of the zero sets of a list of predicates.
///
/// A point is regular when every predicate satisfies |f(p)| >= margin.
/// Predicates are signed so that a path can be tested for crossing the locus
/// by sign changes.
class SingularLocus {
 public:
  SingularLocus() = default;
  explicit SingularLocus(std::vector<SingularPredicate> predicates);

  void add(SingularPredicate predicate);
  void append(const SingularLocus& other);

  bool is_regular(const Point& p, double margin = kRegularityMargin) const;
  /// Throws SingularPointError naming the first violated predicate.
  void require_regular(const Point& p, double margin = kRegularityMargin) const;

  /// Sign of every predicate at p (+1 / -1; 0 only exactly on the locus).
  std::vector<int> signs(const Point& p) const;

  const std::vector<SingularPredicate>& predicates() const { return predicates_; }
  bool empty() const { return predicates_.empty(); }

 private:
  std::vector<SingularPredicate> predicates_;
};

/// Bijection of coordinate indices {0..dim-1}; image[i] = sigma(i).
///
/// The induced map on points moves coordinate i to slot sigma(i):
/// (sigma . u)_i = u_{sigma^-1(i)}. With this convention the action is a left
/// action, apply(compose(s, t), u) == apply(s, apply(t, u)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t dim);
  /// Transposition exchanging coordinates j and l (0-based).
  static Permutation transposition(std::size_t dim, std::size_t j, std::size_t l);

  std::size_t dim() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  bool is_involution() const;

  /// (s o t)(i) = s(t(i)).
  friend Permutation compose(const Permutation& s, const Permutation& t);

  Point apply(const Point& u) const;

  /// Matrix P with (P u) == apply(u).
  Matrix matrix() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }

 private:
  std::vector<std::size_t> image_;
};

Permutation compose(const Permutation& s, const Permutation& t);

}  // namespace lenard
