#include "gammae/log_gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gammae/errors.hpp"

namespace gammae {
namespace {

// (ζ(k) - 1) / k for k = 2..31.
constexpr std::array<double, 30> kZetaMinusOneOverK = {
    0.322467033424113218236,
    0.0673523010531980951332,
    0.020580808427784547879,
    0.00738555102867398526627,
    0.00289051033074152328575,
    0.00119275391170326097711,
    0.000509669524743042422336,
    0.000223154758453579379761,
    0.0000994575127818085337146,
    0.0000449262367381331417002,
    0.0000205072127756706915532,
    0.00000943948827526839590399,
    0.00000437486678990748780418,
    0.00000203921575380136623678,
    9.55141213040741983286e-7,
    4.49246919876456604329e-7,
    2.12071848055546658692e-7,
    1.00432248239680996087e-7,
    4.76981016936398056576e-8,
    2.27110946089431649103e-8,
    1.08386592148969540911e-8,
    5.18347504197004665512e-9,
    2.48367454380247831719e-9,
    1.19214014058609120744e-9,
    5.73136724167886201333e-10,
    2.75952288512423314518e-10,
    1.33047643742444894815e-10,
    6.42296456383810002208e-11,
    3.10442477473222727624e-11,
    1.50213840807541421709e-11};

constexpr double kOneMinusEulerGamma = 0.4227843350984671393934879;

// B_2k / (2k (2k-1)), k = 1..8.
constexpr std::array<double, 8> kStirlingCoefficients = {
    1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};

// ln Γ(2 + z) for |z| <= 1/2.
double log_gamma_near_two(double z) {
  double sum = 0.0;
  for (std::size_t k = kZetaMinusOneOverK.size(); k-- > 0;) {
    // coefficient of z^(k+2) carries the sign (-1)^k
    const double c = (k % 2 == 0) ? kZetaMinusOneOverK[k] : -kZetaMinusOneOverK[k];
    sum = sum * z + c;
  }
  return z * (kOneMinusEulerGamma + z * sum);
}

double log_gamma_stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (std::size_t k = kStirlingCoefficients.size(); k-- > 0;)
    series = series * inv2 + kStirlingCoefficients[k];
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series * inv;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma: argument must be positive and finite, got " +
                      std::to_string(x));
  if (x >= 12.0) return log_gamma_stirling(x);
  if (x < 0.5) return log_gamma_near_two(x) - std::log1p(x) - std::log(x);
  if (x < 1.5) {
    const double z = x - 1.0;
    return log_gamma_near_two(z) - std::log1p(z);
  }
  if (x <= 2.5) return log_gamma_near_two(x - 2.0);
  double product = 1.0;
  while (x > 2.5) {
    x -= 1.0;
    product *= x;
  }
  return log_gamma_near_two(x - 2.0) + std::log(product);
}

double stirling_log(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("stirling_log: argument must be positive and finite");
  return 0.5 * std::log(2.0 * std::numbers::pi * x) + x * std::log(x) - x;
}

}  // namespace gammae
