#include "gammae/gamma_e.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gammae/errors.hpp"
#include "gammae/log_gamma.hpp"

namespace gammae {
namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      carry_ += (sum_ - t) + v;
    else
      carry_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void check_index(std::int64_t i, std::int64_t min_i, const char* op) {
  if (i < min_i)
    throw DomainError(std::string(op) + ": index must be >= " + std::to_string(min_i) +
                      ", got " + std::to_string(i));
  if (i > kMaxProductIndex)
    throw DomainError(std::string(op) + ": index exceeds product cost bound " +
                      std::to_string(kMaxProductIndex));
}

// Σ_{k=first}^{last-1} ln(a + k b)
double log_product_range(std::int64_t first, std::int64_t last, const Params& p) {
  CompensatedSum sum;
  for (std::int64_t k = first; k < last; ++k)
    sum.add(std::log(std::fma(static_cast<double>(k), p.b(), p.a())));
  return sum.value();
}

}  // namespace

Params::Params(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !std::isfinite(a) || !(b > 0.0) || !std::isfinite(b))
    throw DomainError("Params: a and b must be positive and finite, got a=" +
                      std::to_string(a) + ", b=" + std::to_string(b));
  if (!std::isfinite(a / b) || !(a / b > 0.0))
    throw DomainError("Params: a/b must be finite and positive");
}

LogValue gamma_e_product(std::int64_t i, const Params& p) {
  check_index(i, 1, "gamma_e_product");
  return LogValue::from_log(log_product_range(0, i, p));
}

LogValue gamma_e_closed(double x, const Params& p) {
  const double shifted = x + p.ratio();
  if (!(shifted > 0.0) || !std::isfinite(x))
    throw DomainError("gamma_e_closed: requires x + a/b > 0, got x=" + std::to_string(x));
  return LogValue::from_log(x * std::log(p.b()) - log_gamma(p.ratio()) + log_gamma(shifted));
}

std::int64_t euler_maclaurin_default_head(std::int64_t i, const Params& p) {
  constexpr double kAnchor = 40.0;
  const double needed = std::max(0.0, std::ceil(kAnchor - p.ratio()));
  return std::min<std::int64_t>(i - 1, static_cast<std::int64_t>(needed));
}

LogValue gamma_e_euler_maclaurin(std::int64_t i, const Params& p, int order,
                                 std::optional<std::int64_t> direct_terms) {
  check_index(i, 2, "gamma_e_euler_maclaurin");
  if (order < 0 || order > 2)
    throw DomainError("gamma_e_euler_maclaurin: order must be 0, 1 or 2");
  const std::int64_t last = i - 1;
  const std::int64_t head = direct_terms ? *direct_terms : euler_maclaurin_default_head(i, p);
  if (head < 0) throw DomainError("gamma_e_euler_maclaurin: negative head length");
  if (head >= last) return LogValue::from_log(log_product_range(0, i, p));

  const double a = p.a();
  const double b = p.b();
  const double lo = static_cast<double>(head);
  const double hi = static_cast<double>(last);
  const double u_lo = std::fma(lo, b, a);
  const double u_hi = std::fma(hi, b, a);
  const double log_lo = std::log(u_lo);
  const double log_hi = std::log(u_hi);

  CompensatedSum sum;
  sum.add(log_product_range(0, head, p));
  // ∫ ln(a + b t) dt = ((a + b t)/b)(ln(a + b t) - 1)
  sum.add(u_hi * (log_hi - 1.0) / b);
  sum.add(-u_lo * (log_lo - 1.0) / b);
  sum.add(0.5 * (log_lo + log_hi));
  if (order >= 1) {
    // B_2/2! (f'(hi) - f'(lo)), f'(t) = b/(a+bt)
    sum.add((b / u_hi - b / u_lo) / 12.0);
  }
  if (order >= 2) {
    // B_4/4! (f'''(hi) - f'''(lo)), f'''(t) = 2b^3/(a+bt)^3
    const double d_hi = b / u_hi;
    const double d_lo = b / u_lo;
    sum.add(-(2.0 * d_hi * d_hi * d_hi - 2.0 * d_lo * d_lo * d_lo) / 720.0);
  }
  return LogValue::from_log(sum.value());
}

double constant_A(const Params& p) {
  const double r = p.ratio();
  return std::exp(0.5 * std::log(2.0 * std::numbers::pi) - log_gamma(r) + (1.0 - r) +
                  (0.5 - r) * std::log(p.b()));
}

double euler_asymptotic_log(double i, const Params& p, double A) {
  if (!(A > 0.0) || !std::isfinite(A))
    throw DomainError("euler_asymptotic_log: A must be positive and finite");
  const double base = std::fma(p.b(), i - 1.0, p.a());
  if (!(base > 0.0) || !std::isfinite(base))
    throw DomainError("euler_asymptotic_log: requires a - b + b i > 0");
  return std::log(A) + (p.ratio() + i - 0.5) * std::log(base) - i;
}

ConvergenceRecord estimate_A(std::int64_t i, const Params& p) {
  check_index(i, 2, "estimate_A");
  const double log_ratio =
      gamma_e_product(i, p).log_abs() - euler_asymptotic_log(static_cast<double>(i), p, 1.0);
  ConvergenceRecord rec{};
  rec.i = i;
  rec.a_hat = std::exp(log_ratio);
  rec.a_closed = constant_A(p);
  rec.rel_error = std::fabs(rec.a_hat / rec.a_closed - 1.0);
  return rec;
}

double functional_equation_residual(double x, const Params& p) {
  if (!(x + p.ratio() > 0.0))
    throw DomainError("functional_equation_residual: requires x + a/b > 0");
  const double next = gamma_e_closed(x + 1.0, p).log_abs();
  const double here = gamma_e_closed(x, p).log_abs();
  return std::fabs(next - std::log(std::fma(p.b(), x, p.a())) - here);
}

}  // namespace gammae
