#pragma once

// Adaptive Gauss–Kronrod quadrature on [0, T] and [0, ∞) for integrands of
// the form y^(α-1) g(y) with g smooth and an eventually log-concave,
// exponentially decaying tail.
//
// Strategy
//   * The range is cut into panels [0, y1], [y1, 2 y1], [2 y1, 4 y1], ...
//     with y1 = min(1, T).
//   * On the first panel the substitution y = y1 u^(1/α) maps
//     y^(α-1) g(y) dy to (y1^α / α) g(y) du, removing the endpoint power
//     singularity (α < 1) or kink (non-integer α > 1).
//   * Panels are refined by global adaptive bisection with a 15-point
//     Kronrod / 7-point Gauss pair, always splitting the segment with the
//     largest error estimate (QUADPACK QAG error heuristic).
//   * For [0, ∞) the cut T doubles until |f(T)| T < tol·|I| and the tail
//     certificate |f(T)| / λ ≤ tol·|I| / 10 holds, where λ is the average
//     decay rate of ln|f| over [3T/4, T]. For log-concave tails the decay
//     rate is non-decreasing, so λ under-estimates the rate at T and
//     ∫_T^∞ |f| ≤ |f(T)| / λ.
//   * The bisection phase stops when Σ segment errors ≤ 0.9·tol·|I|.

#include <functional>
#include <optional>

namespace gammae {

struct QuadratureConfig {
  double rel_tolerance = 1e-10;
  int max_subdivisions = 2000;
  /// Upper truncation point. When unset it is chosen adaptively; when set it
  /// must satisfy |f(T)| < rel_tolerance · I / T, otherwise DomainError.
  std::optional<double> tail_cut;

  /// Throws DomainError on an invalid configuration.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< bisection error plus tail bound
  double tail_cut = 0.0;        ///< upper limit actually integrated to
  double tail_bound = 0.0;      ///< certified bound on the dropped tail
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// ∫_0^∞ f(y) dy. `endpoint_exponent` is α in f(y) ~ y^(α-1) as y → 0+.
/// Throws ConvergenceError when max_subdivisions is exhausted.
QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureConfig& cfg,
                                         double endpoint_exponent = 1.0);

/// ∫_0^upper f(y) dy with the same endpoint treatment.
QuadratureResult integrate_from_zero(const Integrand& f, double upper,
                                     const QuadratureConfig& cfg,
                                     double endpoint_exponent = 1.0);

}  // namespace gammae
