#pragma once

// Self-contained ln Γ(x) for real x > 0.
//
// The engine splits the positive axis into four regions:
//
//   x >= 12        Stirling series
//                    (x - 1/2) ln x - x + ln(2π)/2 + Σ_{k=1..8} B_2k / (2k(2k-1) x^(2k-1))
//                  The series is alternating and enveloping, so the truncation
//                  error is below the first omitted term,
//                  B_18 / (18·17·x^17) < 1e-19 for x >= 12.
//   1.5 <= x <= 2.5
//                  Taylor series about 2,
//                    ln Γ(2+z) = (1-γ) z + Σ_{k>=2} (-1)^k (ζ(k)-1)/k z^k,
//                  k = 2..31, |z| <= 1/2. Terms fall like 4^-k/k; the first
//                  omitted term is below 1e-20. Near the zero at x = 2 the
//                  result keeps full relative accuracy since no cancellation
//                  occurs.
//   2.5 < x < 12   Downward recurrence into [1.5, 2.5]: at most ten exact
//                  subtractions of 1 and one log of a rounded product.
//   0 < x < 1.5    ln Γ(x) = ln Γ(x+1) - ln x, with ln x evaluated as
//                  log1p(x-1) on [0.5, 1.5) so the zero at x = 1 retains
//                  relative accuracy (the cancellation factor is 1/γ ≈ 1.7).
//
// Observed accuracy (tests/test_core_numerics.cpp, 40-digit references):
// relative error below 1e-15 typical, contract 1e-13 for x >= 0.1.

namespace gammae {

/// ln Γ(x). Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// ln(sqrt(2πx) x^x e^-x): the bare Stirling approximant to Γ(x+1),
/// without correction terms.
double stirling_log(double x);

}  // namespace gammae
