#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lenard {

struct Tolerances {
  double analytic = 1e-9;  // residuals computed from analytic derivatives only
  double fd = 1e-6;        // residuals involving finite differences or quadrature
};

struct ConditionResult {
  std::string name;
  std::size_t points = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Per-condition max residuals over a point set.
class VerificationReport {
 public:
  /// pass = residual < tolerance; NaN never passes.
  void add(std::string name, std::size_t points, double max_residual, double tolerance);
  void append(const VerificationReport& other, std::string_view prefix = {});

  bool pass() const;
  const std::vector<ConditionResult>& conditions() const { return conditions_; }
  /// nullptr when no condition has that name.
  const ConditionResult* find(std::string_view name) const;

 private:
  std::vector<ConditionResult> conditions_;
};

nlohmann::ordered_json to_json(const ConditionResult& c);
nlohmann::ordered_json to_json(const VerificationReport& r);

/// One line per condition, "PASS"/"FAIL" first.
std::string render_text(const VerificationReport& r);

}  // namespace lenard
