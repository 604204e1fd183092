#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "lenard/equivariant.hpp"
#include "lenard/errors.hpp"
#include "lenard/gelfand_dikii.hpp"
#include "lenard/parallel.hpp"
#include "lenard/sampling.hpp"
#include "lenard/wdvv.hpp"

using namespace lenard;

namespace {

void expect_identical(const VerificationReport& a, const VerificationReport& b) {
  ASSERT_EQ(a.conditions().size(), b.conditions().size());
  for (std::size_t i = 0; i < a.conditions().size(); ++i) {
    EXPECT_EQ(a.conditions()[i].name, b.conditions()[i].name);
    EXPECT_EQ(a.conditions()[i].max_residual, b.conditions()[i].max_residual) << a.conditions()[i].name;
    EXPECT_EQ(a.conditions()[i].pass, b.conditions()[i].pass);
  }
}

}  // namespace

TEST(MaxReduce, SerialAndParallelAgreeBitwise) {
  Sampler s(5);
  std::vector<Point> pts;
  for (int i = 0; i < 300; ++i) pts.push_back(s.uniform_box(3, -1, 1));
  auto kernel = [](const Point& p) { return std::vector<double>{std::sin(p.sum()), p.norm(), p(0) * p(1)}; };
  EXPECT_EQ(max_reduce(pts, 3, kernel, Execution::serial), max_reduce(pts, 3, kernel, Execution::parallel));
}

TEST(MaxReduce, NanNeverPasses) {
  std::vector<Point> pts(4, Point::Zero(3));
  int calls = 0;
  auto kernel = [&](const Point&) {
#ifdef _OPENMP
#pragma omp critical
#endif
    ++calls;
    return std::vector<double>{calls == 2 ? std::nan("") : 0.0};
  };
  EXPECT_TRUE(std::isnan(max_reduce(pts, 1, kernel, Execution::serial)[0]));
  VerificationReport r;
  r.add("nan", 1, std::nan(""), 1.0);
  EXPECT_FALSE(r.pass());
}

TEST(MaxReduce, ParallelRethrows) {
  std::vector<Point> pts(16, Point::Zero(3));
  pts[7](0) = 1.0;
  auto kernel = [](const Point& p) -> std::vector<double> {
    if (p(0) == 1.0) throw std::runtime_error("boom");
    return {0.0};
  };
  EXPECT_THROW(max_reduce(pts, 1, kernel, Execution::parallel), std::runtime_error);
}

TEST(VerifyComplex, SerialMatchesParallel) {
  const auto c = equivariant::assemble_complex(equivariant::example3_fixture().params);
  const auto pts = equivariant::sample_points(c, 40, 42);
  expect_identical(equivariant::verify_complex(c, pts, {}, Execution::serial),
                   equivariant::verify_complex(c, pts, {}, Execution::parallel));
}

TEST(VerifyGd, SerialMatchesParallel) {
  const auto pts = gd::sample_points(40, 42);
  expect_identical(gd::verify_gd_complex(pts, 1e-8, 1e-6, Execution::serial),
                   gd::verify_gd_complex(pts, 1e-8, 1e-6, Execution::parallel));
}

TEST(VerifyWdvv, SerialMatchesParallel) {
  const auto f = wdvv::VeselovPotential(3, 2).prepotential();
  const auto pts = wdvv::sample_points(f, 60, 42);
  wdvv::WdvvSuiteOptions serial, parallel;
  serial.generalized = parallel.generalized = true;
  serial.exec = Execution::serial;
  expect_identical(wdvv::verify_prepotential(f, pts, serial), wdvv::verify_prepotential(f, pts, parallel));
}

TEST(Sampler, Deterministic) {
  Sampler a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.uniform(0, 1), b.uniform(0, 1));
  Sampler c(7);
  const double u = c.uniform(0.5, 3.0);
  EXPECT_GE(u, 0.5);
  EXPECT_LT(u, 3.0);
}

TEST(Sampler, FirstDrawMatchesDocumentedFormula) {
  std::mt19937_64 engine(42);
  const double expected = 0.5 + 2.5 * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
  Sampler s(42);
  EXPECT_EQ(s.uniform(0.5, 3.0), expected);
}

TEST(Sampler, RegularSampleRespectsGapsAndLocus) {
  Sampler s(1);
  SamplingDomain d;
  d.locus.add({"a1-2", [](const Point& p) { return p(0) - 2.0; }});
  const auto pts = sample_regular(s, d, 200);
  ASSERT_EQ(pts.size(), 200u);
  for (const auto& p : pts) {
    EXPECT_GE(std::abs(p(0) - 2.0), kRegularityMargin);
    EXPECT_GE(std::abs(p(0) - p(1)), 0.05);
    EXPECT_GE(std::abs(p(1) - p(2)), 0.05);
    EXPECT_GE(std::abs(p(0) - p(2)), 0.05);
  }
}

TEST(Sampler, Exhaustion) {
  Sampler s(1);
  SamplingDomain d;
  d.locus.add({"never", [](const Point&) { return 0.0; }});
  EXPECT_THROW(sample_regular(s, d, 1, 1000), SamplingExhausted);
}
