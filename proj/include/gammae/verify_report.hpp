#pragma once

#include <string>
#include <vector>

namespace gammae {

struct Check {
  std::string label;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Observed value recorded alongside the checks (e.g. a decay table row).
struct Evidence {
  std::string label;
  double value = 0.0;
};

struct VerifyReport {
  std::string suite_name;
  std::vector<Check> checks;
  std::vector<Evidence> evidence;

  /// True iff every check passes (vacuously true for an empty report).
  bool overall_pass() const;

  /// Adds a check that passes when residual <= tolerance (NaN fails).
  void add(std::string label, double residual, double tolerance);
  void note(std::string label, double value);
  /// Appends the checks and evidence of `other`, prefixing labels with its suite name.
  void merge(const VerifyReport& other);
  double max_residual() const;
};

}  // namespace gammae
