#include "lenard/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lenard {

void VerificationReport::add(std::string name, std::size_t points, double max_residual, double tolerance) {
  const bool ok = std::isfinite(max_residual) && max_residual < tolerance;
  conditions_.push_back({std::move(name), points, max_residual, tolerance, ok});
}

void VerificationReport::append(const VerificationReport& other, std::string_view prefix) {
  for (auto c : other.conditions_) {
    c.name = std::string(prefix) + c.name;
    conditions_.push_back(std::move(c));
  }
}

bool VerificationReport::pass() const {
  return !conditions_.empty() &&
         std::all_of(conditions_.begin(), conditions_.end(), [](const ConditionResult& c) { return c.pass; });
}

const ConditionResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : conditions_)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::ordered_json to_json(const ConditionResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["points"] = c.points;
  j["max_residual"] = std::isfinite(c.max_residual) ? nlohmann::ordered_json(c.max_residual) : nlohmann::ordered_json();
  j["tol"] = c.tolerance;
  j["pass"] = c.pass;
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : r.conditions()) arr.push_back(to_json(c));
  return arr;
}

std::string render_text(const VerificationReport& r) {
  std::string out;
  char buf[256];
  for (const auto& c : r.conditions()) {
    std::snprintf(buf, sizeof buf, "%s  %-34s points=%-4zu max_residual=%.3e tol=%.1e\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.points, c.max_residual, c.tolerance);
    out += buf;
  }
  return out;
}

}  // namespace lenard
