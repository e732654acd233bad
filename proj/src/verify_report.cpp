#include "gammae/verify_report.hpp"

#include <algorithm>
#include <utility>

namespace gammae {

bool VerifyReport::overall_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerifyReport::add(std::string label, double residual, double tolerance) {
  checks.push_back({std::move(label), residual, tolerance, residual <= tolerance});
}

void VerifyReport::note(std::string label, double value) {
  evidence.push_back({std::move(label), value});
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& c : other.checks)
    checks.push_back({other.suite_name + "/" + c.label, c.residual, c.tolerance, c.pass});
  for (const auto& e : other.evidence)
    evidence.push_back({other.suite_name + "/" + e.label, e.value});
}

double VerifyReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

}  // namespace gammae
