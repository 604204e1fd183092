#include "lenard/chart.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lenard/errors.hpp"

namespace lenard {

Chart::Chart(std::string name_, std::size_t dim_) : name(std::move(name_)), dim(dim_) {
  if (dim < 2) throw InvalidParameter("chart '" + name + "' must have dimension >= 2");
}

SingularLocus::SingularLocus(std::vector<SingularPredicate> predicates)
    : predicates_(std::move(predicates)) {}

void SingularLocus::add(SingularPredicate predicate) { predicates_.push_back(std::move(predicate)); }

void SingularLocus::append(const SingularLocus& other) {
  for (const auto& p : other.predicates_) {
    const bool seen = std::any_of(predicates_.begin(), predicates_.end(),
                                  [&](const SingularPredicate& q) { return q.name == p.name; });
    if (!seen) predicates_.push_back(p);
  }
}

bool SingularLocus::is_regular(const Point& p, double margin) const {
  return std::all_of(predicates_.begin(), predicates_.end(), [&](const SingularPredicate& q) {
    const double v = q.eval(p);
    return std::isfinite(v) && std::abs(v) >= margin;
  });
}

void SingularLocus::require_regular(const Point& p, double margin) const {
  for (const auto& q : predicates_) {
    const double v = q.eval(p);
    if (!std::isfinite(v) || std::abs(v) < margin)
      throw SingularPointError("point is on the singular locus: |" + q.name + "| = " +
                               std::to_string(std::abs(v)) + " < " + std::to_string(margin));
  }
}

std::vector<int> SingularLocus::signs(const Point& p) const {
  std::vector<int> out;
  out.reserve(predicates_.size());
  for (const auto& q : predicates_) {
    const double v = q.eval(p);
    out.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return out;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || hit[v]) throw InvalidParameter("permutation image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t dim) {
  std::vector<std::size_t> img(dim);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t dim, std::size_t j, std::size_t l) {
  if (j >= dim || l >= dim) throw DimensionMismatch("transposition index out of range");
  auto p = identity(dim);
  std::swap(p.image_[j], p.image_[l]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_involution() const { return compose(*this, *this) == identity(dim()); }

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.dim() != t.dim()) throw DimensionMismatch("composing permutations of different size");
  std::vector<std::size_t> img(s.dim());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = s(t(i));
  return Permutation(std::move(img));
}

Point Permutation::apply(const Point& u) const {
  if (static_cast<std::size_t>(u.size()) != dim()) throw DimensionMismatch("permutation/point size mismatch");
  Point out(u.size());
  for (std::size_t i = 0; i < dim(); ++i) out(static_cast<Eigen::Index>(image_[i])) = u(static_cast<Eigen::Index>(i));
  return out;
}

Matrix Permutation::matrix() const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m(static_cast<Eigen::Index>(image_[i]), static_cast<Eigen::Index>(i)) = 1.0;
  return m;
}

}  // namespace lenard
