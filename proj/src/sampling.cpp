#include "lenard/sampling.hpp"

#include <cmath>

#include "lenard/errors.hpp"

namespace lenard {

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Point Sampler::uniform_box(std::size_t dim, double lo, double hi) {
  Point p(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = uniform(lo, hi);
  return p;
}

namespace {

bool gaps_ok(const Point& p, double min_gap) {
  if (min_gap <= 0) return true;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    for (Eigen::Index j = i + 1; j < p.size(); ++j)
      if (std::abs(p(i) - p(j)) < min_gap) return false;
  return true;
}

}  // namespace

std::vector<Point> sample_regular(Sampler& sampler, const SamplingDomain& domain, std::size_t count,
                                  std::size_t max_attempts) {
  std::vector<Point> out;
  out.reserve(count);
  std::size_t rejected = 0;
  while (out.size() < count) {
    Point p = sampler.uniform_box(domain.dim, domain.lo, domain.hi);
    if (gaps_ok(p, domain.min_gap) && domain.locus.is_regular(p, domain.margin)) {
      out.push_back(std::move(p));
    } else if (++rejected > max_attempts) {
      throw SamplingExhausted("could not find " + std::to_string(count) + " regular points (found " +
                              std::to_string(out.size()) + " after " + std::to_string(rejected) +
                              " rejections)");
    }
  }
  return out;
}

}  // namespace lenard
