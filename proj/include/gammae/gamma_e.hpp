#pragma once

// Euler's generalized factorial
//
//   Γ_E(i; a, b) = a (a+b) (a+2b) ... (a+(i-1)b)
//
// and its interpolation Γ_E(x) = b^x Γ(x + a/b) / Γ(a/b), together with
// Euler's asymptotic form A (a-b+bi)^(a/b+i-1/2) e^-i and the constant
//
//   A = sqrt(2π) / Γ(a/b) · e^(1-a/b) · b^(1/2-a/b).
//
// All values that can overflow a double are returned as LogValue.

#include <cstdint>
#include <optional>

#include "gammae/log_value.hpp"

namespace gammae {

/// The (a, b) pair of the product. Both must be positive and finite.
class Params {
 public:
  /// Throws DomainError unless a > 0 and b > 0.
  Params(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double ratio() const { return a_ / b_; }

 private:
  double a_;
  double b_;
};

/// Largest index accepted by the product-based routes (cost is linear in i).
inline constexpr std::int64_t kMaxProductIndex = 10'000'000;

/// One row of the Â(i) convergence table.
struct ConvergenceRecord {
  std::int64_t i;
  double a_hat;
  double a_closed;
  double rel_error;  ///< |a_hat / a_closed - 1|
};

/// Π_{k=0}^{i-1} (a + k b) summed in log space. Requires 1 <= i <= kMaxProductIndex.
LogValue gamma_e_product(std::int64_t i, const Params& p);

/// b^x Γ(x + a/b) / Γ(a/b). Requires x + a/b > 0.
LogValue gamma_e_closed(double x, const Params& p);

/// Euler–Maclaurin evaluation of ln Γ_E(i) = Σ_{k=0}^{i-1} ln(a + k b).
///
/// The first `direct_terms` summands are added exactly; the remainder
/// k = m..i-1 is replaced by
///
///   ∫_m^{i-1} f + (f(m) + f(i-1))/2 + Σ_{j=1}^{order} B_2j/(2j)! (f^(2j-1)(i-1) - f^(2j-1)(m))
///
/// with f(t) = ln(a + b t). Anchoring the formula at t = 0 leaves an O(1)
/// remainder (about 5e-4 for a = b = 1) that no amount of i removes, so the
/// default head runs until a/b + m >= 40, where the first omitted correction
/// is below 1/(1260·40^5) ≈ 8e-12. Pass direct_terms = 0 for the formula
/// anchored at zero.
LogValue gamma_e_euler_maclaurin(std::int64_t i, const Params& p, int order,
                                 std::optional<std::int64_t> direct_terms = std::nullopt);

/// Default head length used by gamma_e_euler_maclaurin.
std::int64_t euler_maclaurin_default_head(std::int64_t i, const Params& p);

/// Closed-form A.
double constant_A(const Params& p);

/// ln A + (a/b + i - 1/2) ln(a - b + b i) - i. Requires a - b + b i > 0, A > 0.
double euler_asymptotic_log(double i, const Params& p, double A);

/// Â(i) = Γ_E(i) / ((a-b+bi)^(a/b+i-1/2) e^-i), evaluated in log space.
ConvergenceRecord estimate_A(std::int64_t i, const Params& p);

/// |ln Γ_E(x+1) - ln(a + b x) - ln Γ_E(x)| on the closed route.
double functional_equation_residual(double x, const Params& p);

}  // namespace gammae
