#include "gammae/log_value.hpp"

#include <cmath>

#include "gammae/errors.hpp"

namespace gammae {

LogValue LogValue::from_real(double r) {
  if (std::isnan(r)) throw DomainError("LogValue::from_real: NaN");
  if (r == 0.0) return LogValue{};
  return LogValue{r > 0.0 ? 1 : -1, std::log(std::fabs(r))};
}

LogValue LogValue::from_log(double log_abs, int sign) {
  if (sign == 0) return LogValue{};
  if (std::isnan(log_abs) || log_abs == HUGE_VAL)
    throw DomainError("LogValue::from_log: non-finite log magnitude");
  if (log_abs == -HUGE_VAL) return LogValue{};
  return LogValue{sign > 0 ? 1 : -1, log_abs};
}

double LogValue::to_real() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_abs_);
}

LogValue LogValue::operator-() const { return LogValue{-sign_, log_abs_}; }

LogValue multiply(LogValue u, LogValue v) {
  if (u.is_zero() || v.is_zero()) return LogValue::zero();
  return LogValue::from_log(u.log_abs() + v.log_abs(), u.sign() * v.sign());
}

LogValue divide(LogValue u, LogValue v) {
  if (v.is_zero()) throw DomainError("LogValue divide: zero divisor");
  if (u.is_zero()) return LogValue::zero();
  return LogValue::from_log(u.log_abs() - v.log_abs(), u.sign() * v.sign());
}

LogValue pow_scalar(LogValue u, double p) {
  if (!std::isfinite(p)) throw DomainError("pow_scalar: non-finite exponent");
  if (u.is_zero()) {
    if (p > 0.0) return LogValue::zero();
    throw DomainError("pow_scalar: zero base with non-positive exponent");
  }
  int sign = 1;
  if (u.sign() < 0) {
    if (p != std::floor(p))
      throw DomainError("pow_scalar: negative base with non-integral exponent");
    if (std::fmod(std::fabs(p), 2.0) == 1.0) sign = -1;
  }
  return LogValue::from_log(p * u.log_abs(), sign);
}

LogValue signed_add(LogValue u, LogValue v) {
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  const LogValue& big = u.log_abs() >= v.log_abs() ? u : v;
  const LogValue& small = u.log_abs() >= v.log_abs() ? v : u;
  const double ratio = std::exp(small.log_abs() - big.log_abs());
  if (big.sign() == small.sign())
    return LogValue::from_log(big.log_abs() + std::log1p(ratio), big.sign());
  if (big.log_abs() == small.log_abs()) return LogValue::zero();
  return LogValue::from_log(big.log_abs() + std::log1p(-ratio), big.sign());
}

}  // namespace gammae
