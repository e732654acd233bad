#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "gammae/errors.hpp"
#include "gammae/gamma_e.hpp"
#include "gammae/log_gamma.hpp"
#include "oracles.hpp"

using namespace gammae;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kSqrtTwoPi = std::sqrt(2.0 * std::numbers::pi);

std::vector<Params> grid16() {
  std::vector<Params> out;
  for (double a : {0.25, 1.0, 2.5, 10.0})
    for (double b : {0.25, 1.0, 2.5, 10.0}) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("Params domain") {
  CHECK_NOTHROW(Params(1e-3, 1e3));
  CHECK_THROWS_AS(Params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(Params(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(Params(1.0, std::numeric_limits<double>::infinity()), DomainError);
  CHECK(Params(3.0, 2.0).ratio() == 1.5);
}

TEST_CASE("gamma_e_product examples") {
  CHECK(gamma_e_product(1, Params(7, 3)).to_real() == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(gamma_e_product(5, Params(1, 1)).to_real() ==
        doctest::Approx(double(oracle::factorial(5))).epsilon(1e-14));
  CHECK(gamma_e_product(5, Params(1, 2)).to_real() == doctest::Approx(1.0 * 3 * 5 * 7 * 9).epsilon(1e-14));
  CHECK(gamma_e_product(5, Params(1, 2)).sign() == 1);
  CHECK_THROWS_AS(gamma_e_product(0, Params(1, 1)), DomainError);
  CHECK_THROWS_AS(gamma_e_product(kMaxProductIndex + 1, Params(1, 1)), DomainError);
}

TEST_CASE("gamma_e_product stays representable past the double range") {
  // 200! overflows a double
  const auto v = gamma_e_product(200, Params(1, 1));
  CHECK(std::isinf(v.to_real()));
  CHECK(v.log_abs() == doctest::Approx(oracle::log_product(200, 1, 1)).epsilon(1e-15));
  CHECK(v.log_abs() == doctest::Approx(log_gamma(201.0)).epsilon(1e-14));
}

TEST_CASE("gamma_e_product agrees with a long-double brute force") {
  for (const auto& p : grid16())
    for (long i : {1L, 7L, 100L, 2000L}) {
      const double ref = oracle::log_product(i, p.a(), p.b());
      CHECK(std::fabs(gamma_e_product(i, p).log_abs() - ref) <= 1e-13 * std::max(1.0, std::fabs(ref)));
    }
}

TEST_CASE("gamma_e_closed examples") {
  CHECK(gamma_e_closed(5, Params(1, 1)).to_real() == doctest::Approx(120.0).epsilon(1e-13));
  CHECK(gamma_e_closed(5, Params(1, 2)).to_real() == doctest::Approx(945.0).epsilon(1e-13));
  for (double a : {0.3, 1.0, 7.0})
    for (double b : {0.1, 3.0, 11.0}) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(gamma_e_closed(1.0, Params(a, b)).to_real() == doctest::Approx(a).epsilon(1e-13));
    }
  // Γ(x) as the a = b = 1 special case, shifted by one
  CHECK(gamma_e_closed(0.5, Params(1, 1)).to_real() ==
        doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_e_closed(-1.0, Params(1, 1)), DomainError);
  CHECK_THROWS_AS(gamma_e_closed(-2.0, Params(2, 1)), DomainError);
  CHECK_NOTHROW(gamma_e_closed(-0.9, Params(1, 1)));
}

TEST_CASE("Euler-Maclaurin examples") {
  const Params unit(1, 1);
  SUBCASE("order 2 at i = 100 matches the exact product") {
    const double exact = gamma_e_product(100, unit).log_abs();
    CHECK(std::fabs(gamma_e_euler_maclaurin(100, unit, 2).log_abs() - exact) <= 1e-10);
  }
  SUBCASE("i = 2, order 0, anchored at zero is the trapezoid value") {
    const double expected = 2 * std::log(2.0) - 1.0 + std::log(2.0) / 2;
    CHECK(gamma_e_euler_maclaurin(2, unit, 0, 0).log_abs() == doctest::Approx(expected).epsilon(1e-15));
    // O(1) error against ln 2 at this tiny i
    CHECK(std::fabs(expected - std::log(2.0)) > 0.01);
  }
  SUBCASE("order 2 beats order 0 at i = 1000, a = 3, b = 2") {
    const Params p(3, 2);
    const double exact = gamma_e_product(1000, p).log_abs();
    for (std::int64_t head : {std::int64_t{0}, euler_maclaurin_default_head(1000, p)}) {
      const double e0 = std::fabs(gamma_e_euler_maclaurin(1000, p, 0, head).log_abs() - exact);
      const double e2 = std::fabs(gamma_e_euler_maclaurin(1000, p, 2, head).log_abs() - exact);
      CHECK(e2 < e0);
    }
  }
  SUBCASE("anchoring at zero leaves an O(1) remainder") {
    const double exact = gamma_e_product(1000, unit).log_abs();
    const double anchored = gamma_e_euler_maclaurin(1000, unit, 2, 0).log_abs();
    CHECK(std::fabs(anchored - exact) > 1e-4);
    CHECK(std::fabs(anchored - exact) < 1e-3);
  }
  SUBCASE("short products fall back to the direct sum") {
    const double exact = gamma_e_product(10, unit).log_abs();
    CHECK(gamma_e_euler_maclaurin(10, unit, 2).log_abs() == doctest::Approx(exact).epsilon(1e-15));
  }
  CHECK_THROWS_AS(gamma_e_euler_maclaurin(1, unit, 2), DomainError);
  CHECK_THROWS_AS(gamma_e_euler_maclaurin(10, unit, 3), DomainError);
  CHECK_THROWS_AS(gamma_e_euler_maclaurin(10, unit, 2, -1), DomainError);
}

TEST_CASE("constant_A examples") {
  CHECK(constant_A(Params(1, 1)) == doctest::Approx(kSqrtTwoPi).epsilon(1e-15));
  CHECK(constant_A(Params(1, 2)) == doctest::Approx(std::sqrt(2.0) * std::exp(0.5)).epsilon(1e-14));
  CHECK(constant_A(Params(1, 2)) == doctest::Approx(2.3316439815971242).epsilon(1e-14));
  CHECK(constant_A(Params(2, 1)) == doctest::Approx(kSqrtTwoPi / std::exp(1.0)).epsilon(1e-14));
  CHECK(constant_A(Params(2, 1)) == doctest::Approx(0.92213700889578912).epsilon(1e-14));
  // empirical oracle at large i
  for (const auto& p : {Params(1, 2), Params(2, 1)})
    CHECK(estimate_A(100000, p).a_hat == doctest::Approx(constant_A(p)).epsilon(2e-6));
}

TEST_CASE("euler_asymptotic_log examples") {
  const Params unit(1, 1);
  const double value = euler_asymptotic_log(10, unit, kSqrtTwoPi);
  // reduces to Stirling's approximant of 10!
  CHECK(value == doctest::Approx(stirling_log(10.0)).epsilon(1e-15));
  CHECK(std::exp(value) == doctest::Approx(3598695.6).epsilon(1e-7));
  CHECK(std::exp(value) / 3628800.0 == doctest::Approx(0.99170).epsilon(1e-5));

  const Params p(1, 2);
  const double A = constant_A(p);
  double previous = std::numeric_limits<double>::infinity();
  for (std::int64_t i : {10, 100, 1000, 10000}) {
    const double gap =
        std::fabs(gamma_e_product(i, p).log_abs() - euler_asymptotic_log(double(i), p, A));
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous < 1e-5);

  CHECK_THROWS_AS(euler_asymptotic_log(10, unit, 0.0), DomainError);
  CHECK_THROWS_AS(euler_asymptotic_log(0.0, unit, 1.0), DomainError);
  CHECK_THROWS_AS(euler_asymptotic_log(-1.0, Params(1, 1), 1.0), DomainError);
}

TEST_CASE("euler_asymptotic_log scaling identity") {
  for (const auto& p : grid16())
    for (double lambda : {0.5, 2.0, 10.0})
      for (double i : {3.0, 17.5, 400.0}) {
        const Params scaled(lambda * p.a(), lambda * p.b());
        const double A = 1.7;
        const double lhs = euler_asymptotic_log(i, scaled, A * std::pow(lambda, 0.5 - p.ratio()));
        const double rhs = euler_asymptotic_log(i, p, A) + i * std::log(lambda);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
      }
}

TEST_CASE("estimate_A examples") {
  const auto unit = estimate_A(1000, Params(1, 1));
  CHECK(unit.i == 1000);
  CHECK(unit.a_closed == doctest::Approx(kSqrtTwoPi).epsilon(1e-15));
  CHECK(unit.rel_error <= 1e-4);
  CHECK(unit.rel_error == std::fabs(unit.a_hat / unit.a_closed - 1.0));

  const Params half(1, 2);
  CHECK(estimate_A(2000, half).rel_error < estimate_A(200, half).rel_error);

  CHECK_THROWS_AS(estimate_A(1, Params(1, 1)), DomainError);
  CHECK_THROWS_AS(estimate_A(kMaxProductIndex + 1, Params(1, 1)), DomainError);
}

TEST_CASE("estimate_A error stays below 1/(6i) for i >= 100") {
  std::vector<Params> params = grid16();
  params.emplace_back(3, 0.5);
  params.emplace_back(0.5, 3);
  for (const auto& p : params)
    for (std::int64_t i : {100, 150, 300, 1000, 5000}) {
      CAPTURE(i);
      CHECK(estimate_A(i, p).rel_error <= 1.0 / (6.0 * double(i)));
    }
}

TEST_CASE("estimate_A convergence is strictly decreasing over decades") {
  for (const auto& p : grid16()) {
    double previous = std::numeric_limits<double>::infinity();
    for (std::int64_t i : {100, 1000, 10000}) {
      const double e = estimate_A(i, p).rel_error;
      CHECK(e < previous);
      CHECK(e <= 1.0 / (6.0 * double(i)));
      previous = e;
    }
  }
}

TEST_CASE("functional_equation_residual examples") {
  CHECK(functional_equation_residual(1.0, Params(7, 3)) <= 1e-11);
  CHECK(gamma_e_closed(2.0, Params(7, 3)).to_real() == doctest::Approx(70.0).epsilon(1e-13));
  CHECK(functional_equation_residual(0.5, Params(1, 2)) <= 1e-11);
  CHECK(functional_equation_residual(1000.25, Params(3, 0.5)) <= 1e-10);
  CHECK_THROWS_AS(functional_equation_residual(-5.0, Params(1, 1)), DomainError);
}

TEST_CASE("product and closed routes agree for i in [1, 50] on a 16-pair grid") {
  for (const auto& p : grid16())
    for (std::int64_t i = 1; i <= 50; ++i) {
      CAPTURE(i);
      CHECK(std::fabs(gamma_e_product(i, p).log_abs() - gamma_e_closed(double(i), p).log_abs()) <= 1e-11);
    }
}

TEST_CASE("Euler-Maclaurin order 2 within 1e-8 of the product for i in [100, 1e4]") {
  for (const auto& p : grid16())
    for (std::int64_t i : {100, 101, 250, 999, 4096, 10000}) {
      CAPTURE(i);
      CHECK(std::fabs(gamma_e_euler_maclaurin(i, p, 2).log_abs() - gamma_e_product(i, p).log_abs()) <= 1e-8);
    }
}

TEST_CASE("functional equation on a randomized sweep") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Params p(std::pow(10.0, u(rng) * 2 - 1), std::pow(10.0, u(rng) * 2 - 1));
    const double x = 0.05 * std::pow(2e4, u(rng)) - p.ratio();
    worst = std::max(worst, functional_equation_residual(x, p));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("scaling identities") {
  for (const auto& p : grid16())
    for (double lambda : {0.5, 2.0, 10.0}) {
      const Params scaled(lambda * p.a(), lambda * p.b());
      for (std::int64_t i : {1, 5, 50})
        CHECK(std::fabs(gamma_e_product(i, scaled).log_abs() - double(i) * std::log(lambda) -
                        gamma_e_product(i, p).log_abs()) <= 1e-11);
      for (double x : {-0.1, 0.5, 3.25, 40.0}) {
        if (x + p.ratio() <= 0) continue;
        CHECK(std::fabs(gamma_e_closed(x, scaled).log_abs() - x * std::log(lambda) -
                        gamma_e_closed(x, p).log_abs()) <= 1e-11);
      }
      const double predicted = constant_A(p) * std::pow(lambda, 0.5 - p.ratio());
      CHECK(std::fabs(constant_A(scaled) / predicted - 1.0) <= 1e-12);
    }
}

TEST_CASE("Γ_E is log-convex on sampled points") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& p : grid16())
    for (int k = 0; k < 100; ++k) {
      const double x = 0.05 * std::pow(4000.0, u(rng)) - p.ratio();
      const double y = 0.05 * std::pow(4000.0, u(rng)) - p.ratio();
      const double lx = gamma_e_closed(x, p).log_abs();
      const double ly = gamma_e_closed(y, p).log_abs();
      CHECK(gamma_e_closed(0.5 * (x + y), p).log_abs() <=
            0.5 * (lx + ly) + 8 * kEps * (std::fabs(lx) + std::fabs(ly) + 1));
    }
}
