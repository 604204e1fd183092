#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lenard/report.hpp"

namespace lenard::cli {

inline constexpr int kReportVersion = 1;

enum class Format { json, text };

struct RunConfig {
  std::string command;
  std::string target;  // reproduce: example3 | gd
  // verify-wdvv
  std::string potential = "veselov";
  std::size_t n = 3;
  double m = 2.0;
  std::string euler = "none";
  // build-complex / solve-constraints
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<int> root;
  std::optional<double> sigma2;

  std::size_t points = 50;
  std::uint64_t seed = 42;
  Tolerances tol;
  Format format = Format::json;
  std::string out_path;
};

/// Exit codes: 0 every condition passes, 1 some condition fails, 2 usage or
/// parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lenard::cli
