#pragma once

// Sign / log-magnitude carrier for real numbers that overflow a double.

namespace gammae {

class LogValue {
 public:
  /// Exact zero.
  constexpr LogValue() = default;

  static LogValue from_real(double r);
  /// sign * exp(log_abs). A sign of 0 yields zero regardless of log_abs.
  static LogValue from_log(double log_abs, int sign = 1);
  static constexpr LogValue zero() { return LogValue{}; }

  constexpr int sign() const { return sign_; }
  /// Natural log of |value|. Meaningless when sign() == 0.
  constexpr double log_abs() const { return log_abs_; }
  constexpr bool is_zero() const { return sign_ == 0; }

  /// May return +-inf when the magnitude exceeds the double range.
  double to_real() const;

  LogValue operator-() const;

 private:
  constexpr LogValue(int sign, double log_abs) : sign_(sign), log_abs_(log_abs) {}

  int sign_ = 0;
  double log_abs_ = 0.0;
};

LogValue multiply(LogValue u, LogValue v);
/// Throws DomainError when v is zero.
LogValue divide(LogValue u, LogValue v);
/// u^p. Negative bases require integral p; zero requires p > 0.
LogValue pow_scalar(LogValue u, double p);
/// u + v with log-sum-exp anchored at the larger magnitude. Opposite values
/// with bit-identical log_abs cancel to exact zero.
LogValue signed_add(LogValue u, LogValue v);

inline LogValue operator*(LogValue u, LogValue v) { return multiply(u, v); }
inline LogValue operator/(LogValue u, LogValue v) { return divide(u, v); }
inline LogValue operator+(LogValue u, LogValue v) { return signed_add(u, v); }
inline LogValue operator-(LogValue u, LogValue v) { return signed_add(u, -v); }

}  // namespace gammae
