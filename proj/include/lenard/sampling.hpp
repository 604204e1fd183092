#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lenard/chart.hpp"

namespace lenard {

/// Seedable sampler built on std::mt19937_64.
///
/// Uniform reals use the top 53 bits of each 64-bit draw:
/// u = (x >> 11) * 2^-53, mapped affinely to [lo, hi). This is independent of
/// the standard library's distribution implementation, so another port that
/// uses the same engine reproduces the same stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  Point uniform_box(std::size_t dim, double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// Box [lo, hi]^dim, minimum pairwise coordinate gap, and a singular locus.
struct SamplingDomain {
  std::size_t dim = 3;
  double lo = 0.5;
  double hi = 3.0;
  double min_gap = 0.05;  // 0 disables the gap test
  SingularLocus locus;
  double margin = kRegularityMargin;
};

/// Rejection-samples `count` regular points. Throws SamplingExhausted when
/// more than max_attempts draws are rejected in total.
std::vector<Point> sample_regular(Sampler& sampler, const SamplingDomain& domain, std::size_t count,
                                  std::size_t max_attempts = 100000);

}  // namespace lenard
