#pragma once

// Numerical checks of the integral representation of Γ_E.
//
// The ansatz Γ_E(x) = ∫_c^d y^(x-1) P(y) dy solves Γ_E(x+1) = (a + b x) Γ_E(x)
// when P and an auxiliary Q satisfy
//
//   y P = a P + y Q'        0 = b P + Q
//
// whose solutions are P(y) = -(C/b) e^(-y/b) y^(a/b), Q(y) = C e^(-y/b) y^(a/b),
// and the limits satisfy d^x Q(d) - c^x Q(c) = 0, realized by (c, d) = (0, ∞)
// when x + a/b > 0. Fitting Γ_E(1) = a fixes C = -b^(1-a/b) / Γ(a/b), and the
// substitution y/b -> y turns the ansatz into
//
//   Γ_E(x) = b^x / Γ(a/b) ∫_0^∞ y^(x-1+a/b) e^-y dy.
//
// The printed convergence condition for that integral is x - 1 + a/b > 0; the
// integral and the boundary argument both only need x + a/b > 0, which is the
// domain used here.

#include "gammae/gamma_e.hpp"
#include "gammae/log_value.hpp"
#include "gammae/quadrature.hpp"
#include "gammae/verify_report.hpp"

namespace gammae {

/// Largest integrand peak location x - 1 + a/b accepted by gamma_e_integral.
inline constexpr double kMaxIntegralPeak = 300.0;

/// Γ_E(x) through the integral representation. The integrand is evaluated
/// as exp((x-1+a/b) ln y - y - m) with m its log-peak, so values far beyond
/// the double range stay representable. Requires x + a/b > 0 and
/// x - 1 + a/b <= kMaxIntegralPeak.
LogValue gamma_e_integral(double x, const Params& p, const QuadratureConfig& cfg = {});

double p_function(double y, const Params& p, double C);
double q_function(double y, const Params& p, double C);

/// First residual |y P - a P - y Q'| with Q' by central difference of step
/// h, second residual |b P + Q|. Requires y > 0 and 0 < h <= y/10.
VerifyReport ode_system_residual(double y, const Params& p, double C, double h);

/// First ODE residual at step h divided by the one at h/2 (≈ 4 for a
/// second-order difference).
double ode_halving_ratio(double y, const Params& p, double C, double h);

struct AuxiliaryResidual {
  double residual;  ///< |∫ t^x P - (a+bx) ∫ t^(x-1) P - y^x Q(y)|
  double scale;     ///< largest of the three terms in magnitude
  double integral_upper;   ///< ∫_0^y t^x P(t) dt
  double integral_lower;   ///< ∫_0^y t^(x-1) P(t) dt
  double boundary_term;    ///< y^x Q(y)
};

/// Auxiliary integral identity on [0, y_hi]. Requires x + a/b > 0, y_hi > 0.
AuxiliaryResidual auxiliary_equation_residual(double x, double y_hi, const Params& p, double C,
                                              const QuadratureConfig& cfg = {});

/// Decay evidence for y^x Q(y) at both ends of (0, ∞).
///
/// Near zero the log-magnitude is sampled at 1e-4, 1e-6, 1e-8 and must fall
/// with slope x + a/b in ln y, up to the e^(-y/b) correction
/// y_hi / (b ln(y_hi/y_lo)). At infinity it is sampled at 1e2 and 1e3, shifted
/// up by decades while (x + a/b) ln y still exceeds half of y/b at the upper
/// point; there it must be decreasing and exponentially dominated.
VerifyReport boundary_check(double x, const Params& p, double C);

/// C = -b^(1-a/b) / Γ(a/b), the constant that makes the ansatz equal a at x = 1.
double initial_condition_constant(const Params& p);
/// The same constant before Γ(r+1) = rΓ(r) is applied: -a b^(-a/b) / Γ(a/b + 1).
double initial_condition_constant_unsimplified(const Params& p);

/// ∫_0^∞ y^(x-1) P(y) dy in the original, unrescaled variable. Intended for
/// moderate x where the value fits in a double. Requires x + a/b > 0.
QuadratureResult ansatz_integral(double x, const Params& p, double C,
                                 const QuadratureConfig& cfg = {});

}  // namespace gammae
