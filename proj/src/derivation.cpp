#include "gammae/derivation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "gammae/errors.hpp"
#include "gammae/log_gamma.hpp"

namespace gammae {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// tolerance for checks that require a strictly negative residual
constexpr double kStrictlyNegative = -std::numeric_limits<double>::denorm_min();

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void require_shift(double x, const Params& p, const char* op) {
  if (!(x + p.ratio() > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(op) + ": requires x + a/b > 0, got x=" + std::to_string(x));
}

// ln|y^x Q(y)|
double log_boundary_term(double x, double y, const Params& p, double C) {
  return std::log(std::fabs(C)) + (x + p.ratio()) * std::log(y) - y / p.b();
}

// Q''' by a five-point difference of step H.
double third_derivative(double y, double H, const Params& p, double C) {
  return (q_function(y + 2 * H, p, C) - 2 * q_function(y + H, p, C) +
          2 * q_function(y - H, p, C) - q_function(y - 2 * H, p, C)) /
         (2 * H * H * H);
}

struct OdeResiduals {
  double first;
  double first_tolerance;
  double second;
  double second_tolerance;
};

OdeResiduals ode_residuals(double y, const Params& p, double C, double h) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("ode_system_residual: requires y > 0");
  if (!(h > 0.0) || h > y / 10.0)
    throw DomainError("ode_system_residual: step must lie in (0, y/10]");
  const double a = p.a();
  const double b = p.b();
  const double P = p_function(y, p, C);
  const double Q = q_function(y, p, C);
  const double q_plus = q_function(y + h, p, C);
  const double q_minus = q_function(y - h, p, C);
  const double dq = (q_plus - q_minus) / (2 * h);

  OdeResiduals r{};
  r.first = std::fabs(y * P - a * P - y * dq);
  // central-difference truncation h^2/6 |Q'''(ξ)|, with Q''' sampled across
  // [y-h, y+h] and a factor 2 of slack for the coarse estimate
  const double H = y / 8.0;
  double q3 = 0.0;
  for (double t : {y - h, y, y + h}) q3 = std::max(q3, std::fabs(third_derivative(t, H, p, C)));
  const double truncation = 2.0 * y * h * h / 6.0 * q3;
  const double rounding =
      4.0 * y * kEps * (std::fabs(q_plus) + std::fabs(q_minus)) / (2 * h) +
      8.0 * kEps * (std::fabs(y * P) + std::fabs(a * P) + std::fabs(y * dq));
  r.first_tolerance = truncation + rounding;
  r.second = std::fabs(b * P + Q);
  r.second_tolerance = 1e-13 * std::fabs(Q);
  return r;
}

}  // namespace

LogValue gamma_e_integral(double x, const Params& p, const QuadratureConfig& cfg) {
  require_shift(x, p, "gamma_e_integral");
  const double shift = x + p.ratio();
  const double peak = shift - 1.0;
  if (peak > kMaxIntegralPeak)
    throw DomainError("gamma_e_integral: integrand peak x-1+a/b = " + std::to_string(peak) +
                      " exceeds " + std::to_string(kMaxIntegralPeak) +
                      "; use gamma_e_closed for large x");
  const double log_peak = peak > 0.0 ? peak * std::log(peak) - peak : 0.0;
  const auto integrand = [peak, log_peak](double y) {
    return std::exp(peak * std::log(y) - y - log_peak);
  };
  const auto r = integrate_semi_infinite(integrand, cfg, shift);
  return LogValue::from_log(x * std::log(p.b()) - log_gamma(p.ratio()) + log_peak +
                            std::log(r.value));
}

double p_function(double y, const Params& p, double C) {
  return -(C / p.b()) * std::exp(-y / p.b()) * std::pow(y, p.ratio());
}

double q_function(double y, const Params& p, double C) {
  return C * std::exp(-y / p.b()) * std::pow(y, p.ratio());
}

VerifyReport ode_system_residual(double y, const Params& p, double C, double h) {
  const auto r = ode_residuals(y, p, C, h);
  VerifyReport report;
  report.suite_name = "ode";
  report.add("y P = a P + y Q'", r.first, r.first_tolerance);
  report.add("0 = b P + Q", r.second, r.second_tolerance);
  return report;
}

double ode_halving_ratio(double y, const Params& p, double C, double h) {
  return ode_residuals(y, p, C, h).first / ode_residuals(y, p, C, h / 2).first;
}

AuxiliaryResidual auxiliary_equation_residual(double x, double y_hi, const Params& p, double C,
                                              const QuadratureConfig& cfg) {
  require_shift(x, p, "auxiliary_equation_residual");
  if (!(y_hi > 0.0) || !std::isfinite(y_hi))
    throw DomainError("auxiliary_equation_residual: requires y_hi > 0");
  const double r = p.ratio();
  const double b = p.b();
  // t^x P(t) and t^(x-1) P(t)
  const auto upper = [=](double t) { return -(C / b) * std::exp((x + r) * std::log(t) - t / b); };
  const auto lower = [=](double t) {
    return -(C / b) * std::exp((x - 1.0 + r) * std::log(t) - t / b);
  };
  AuxiliaryResidual out{};
  out.integral_upper = integrate_from_zero(upper, y_hi, cfg, x + 1.0 + r).value;
  out.integral_lower = integrate_from_zero(lower, y_hi, cfg, x + r).value;
  out.boundary_term = std::pow(y_hi, x) * q_function(y_hi, p, C);
  const double coefficient = std::fma(b, x, p.a());
  out.residual =
      std::fabs(out.integral_upper - coefficient * out.integral_lower - out.boundary_term);
  out.scale = std::max({std::fabs(out.integral_upper), std::fabs(coefficient * out.integral_lower),
                        std::fabs(out.boundary_term)});
  return out;
}

VerifyReport boundary_check(double x, const Params& p, double C) {
  require_shift(x, p, "boundary_check");
  if (C == 0.0 || !std::isfinite(C)) throw DomainError("boundary_check: C must be nonzero");
  VerifyReport report;
  report.suite_name = "boundary";
  const double power = x + p.ratio();
  const double b = p.b();

  constexpr std::array<double, 3> kNearZero = {1e-4, 1e-6, 1e-8};
  for (double y : kNearZero)
    report.note("ln|y^x Q| at y=" + num(y), log_boundary_term(x, y, p, C));
  for (std::size_t k = 0; k + 1 < kNearZero.size(); ++k) {
    const double y_big = kNearZero[k];
    const double y_small = kNearZero[k + 1];
    const double l_big = log_boundary_term(x, y_big, p, C);
    const double l_small = log_boundary_term(x, y_small, p, C);
    const double span = std::log(y_big / y_small);
    const double slope = (l_big - l_small) / span;
    report.add("y->0 decay slope over [" + num(y_small) + ", " +
                   num(y_big) + "] matches x + a/b",
               std::fabs(slope - power), y_big / (b * span) + 1e-9 * (1.0 + power));
    report.add("y->0 magnitude shrinks below y=" + num(y_big), l_small - l_big, kStrictlyNegative);
  }

  double shift = 1.0;
  while (power * std::log(1e3 * shift) > 0.5 * 1e3 * shift / b && shift < 1e12) shift *= 10.0;
  const double y_lo = 1e2 * shift;
  const double y_hi = 1e3 * shift;
  const double l_lo = log_boundary_term(x, y_lo, p, C);
  const double l_hi = log_boundary_term(x, y_hi, p, C);
  report.note("ln|y^x Q| at y=" + num(y_lo), l_lo);
  report.note("ln|y^x Q| at y=" + num(y_hi), l_hi);
  report.add("y->inf magnitude shrinks from y=" + num(y_lo), l_hi - l_lo, kStrictlyNegative);
  report.add("y->inf power factor dominated by e^(-y/b) at y=" + num(y_hi),
             power * std::log(y_hi) / (y_hi / b), 0.5);
  return report;
}

double initial_condition_constant(const Params& p) {
  const double r = p.ratio();
  return -std::exp((1.0 - r) * std::log(p.b()) - log_gamma(r));
}

double initial_condition_constant_unsimplified(const Params& p) {
  const double r = p.ratio();
  return -p.a() * std::exp(-r * std::log(p.b()) - log_gamma(r + 1.0));
}

QuadratureResult ansatz_integral(double x, const Params& p, double C, const QuadratureConfig& cfg) {
  require_shift(x, p, "ansatz_integral");
  const double r = p.ratio();
  const double b = p.b();
  const auto integrand = [=](double y) {
    return -(C / b) * std::exp((x - 1.0 + r) * std::log(y) - y / b);
  };
  return integrate_semi_infinite(integrand, cfg, x + r);
}

}  // namespace gammae
