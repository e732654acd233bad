#include "gammae/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gammae/errors.hpp"

namespace gammae {
namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half, centre last) and
// weights, with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double lo;
  double hi;
  bool substituted;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Segment& l, const Segment& r) const { return l.error < r.error; }
};

// Evaluates f on [0, y1] through y = y1 u^(1/α), u ∈ [0, 1].
class Panel {
 public:
  Panel(const Integrand& f, double first_cut, double alpha)
      : f_(f), y1_(first_cut), alpha_(alpha), scale_(std::pow(first_cut, alpha) / alpha) {}

  double operator()(double t, bool substituted) const {
    if (!substituted) return f_(t);
    double y = y1_ * std::pow(t, 1.0 / alpha_);
    y = std::max(y, std::numeric_limits<double>::min());
    return scale_ * std::pow(y, 1.0 - alpha_) * f_(y);
  }

  double first_cut() const { return y1_; }

 private:
  const Integrand& f_;
  double y1_;
  double alpha_;
  double scale_;
};

Segment kronrod(const Panel& g, double lo, double hi, bool substituted) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(centre, substituted);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::fabs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = g(centre - dx, substituted);
    f2[j] = g(centre + dx, substituted);
    resk += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  const double value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double error = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && error != 0.0)
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    error = std::max(50.0 * kEps * resabs, error);
  if (!std::isfinite(value) || !std::isfinite(error))
    throw DomainError("quadrature: integrand is not finite on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return {lo, hi, substituted, value, error};
}

struct Totals {
  double value;
  double error;
};

Totals sum_segments(const std::vector<Segment>& segs) {
  // summing in increasing magnitude keeps the total reproducible and tight
  std::vector<double> values;
  values.reserve(segs.size());
  double error = 0.0;
  for (const auto& s : segs) {
    values.push_back(s.value);
    error += s.error;
  }
  std::sort(values.begin(), values.end(),
            [](double l, double r) { return std::fabs(l) < std::fabs(r); });
  double value = 0.0;
  for (double v : values) value += v;
  return {value, error};
}

// Global adaptive bisection over the given panel breakpoints.
QuadratureResult refine(const Panel& g, const std::vector<double>& cuts,
                        const QuadratureConfig& cfg, double tail_bound) {
  std::vector<Segment> heap;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    // the first panel is integrated in the substituted variable u ∈ [0, 1]
    heap.push_back(k == 0 ? kronrod(g, 0.0, 1.0, true) : kronrod(g, cuts[k], cuts[k + 1], false));
  }
  std::make_heap(heap.begin(), heap.end(), ByError{});
  const double budget = 0.9 * cfg.rel_tolerance;

  Totals totals = sum_segments(heap);
  for (;;) {
    if (totals.error <= budget * std::fabs(totals.value) || totals.error == 0.0) {
      totals = sum_segments(heap);
      if (totals.error <= budget * std::fabs(totals.value) || totals.error == 0.0) break;
    }
    if (static_cast<int>(heap.size()) >= cfg.max_subdivisions)
      throw ConvergenceError("quadrature: tolerance not reached within " +
                                 std::to_string(cfg.max_subdivisions) + " subdivisions",
                             totals.value, totals.error + tail_bound);
    std::pop_heap(heap.begin(), heap.end(), ByError{});
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      throw ConvergenceError("quadrature: segment width reached machine resolution",
                             totals.value, totals.error + tail_bound);
    const Segment left = kronrod(g, worst.lo, mid, worst.substituted);
    const Segment right = kronrod(g, mid, worst.hi, worst.substituted);
    totals.value += left.value + right.value - worst.value;
    totals.error += left.error + right.error - worst.error;
    for (const Segment& s : {left, right}) {
      heap.push_back(s);
      std::push_heap(heap.begin(), heap.end(), ByError{});
    }
  }
  QuadratureResult r;
  r.value = totals.value;
  r.error_estimate = totals.error + tail_bound;
  r.tail_cut = cuts.back();
  r.tail_bound = tail_bound;
  r.subdivisions = static_cast<int>(heap.size());
  return r;
}

std::vector<double> geometric_cuts(double upper) {
  std::vector<double> cuts{0.0};
  double y = std::min(1.0, upper);
  cuts.push_back(y);
  while (y < upper) {
    y = std::min(2.0 * y, upper);
    cuts.push_back(y);
  }
  return cuts;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("quadrature: endpoint exponent must be positive");
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tolerance > 0.0 && rel_tolerance < 1e-2))
    throw DomainError("QuadratureConfig: rel_tolerance must lie in (0, 1e-2)");
  if (max_subdivisions < 1)
    throw DomainError("QuadratureConfig: max_subdivisions must be positive");
  if (tail_cut && !(*tail_cut > 0.0 && std::isfinite(*tail_cut)))
    throw DomainError("QuadratureConfig: tail_cut must be positive and finite");
}

QuadratureResult integrate_from_zero(const Integrand& f, double upper,
                                     const QuadratureConfig& cfg, double endpoint_exponent) {
  cfg.validate();
  check_alpha(endpoint_exponent);
  if (!(upper > 0.0) || !std::isfinite(upper))
    throw DomainError("quadrature: upper limit must be positive and finite");
  const auto cuts = geometric_cuts(upper);
  const Panel g(f, cuts[1], endpoint_exponent);
  return refine(g, cuts, cfg, 0.0);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureConfig& cfg,
                                         double endpoint_exponent) {
  cfg.validate();
  check_alpha(endpoint_exponent);

  if (cfg.tail_cut) {
    const double cut = *cfg.tail_cut;
    auto r = integrate_from_zero(f, cut, cfg, endpoint_exponent);
    if (!(std::fabs(f(cut)) * cut < cfg.rel_tolerance * std::fabs(r.value)))
      throw DomainError("quadrature: tail_cut " + std::to_string(cut) +
                        " violates |f(T)| T < rel_tolerance * I");
    return r;
  }

  // Locate T with a coarse running estimate, one Kronrod rule per panel.
  constexpr double kMaxCut = 1e8;
  const Panel coarse(f, 1.0, endpoint_exponent);
  double running = kronrod(coarse, 0.0, 1.0, true).value;
  double cut = 1.0;
  double tail_bound = 0.0;
  bool seen_nonzero = false;
  for (;;) {
    const double next = 2.0 * cut;
    running += kronrod(coarse, cut, next, false).value;
    cut = next;
    const double f_cut = std::fabs(f(cut));
    const double f_back = std::fabs(f(0.75 * cut));
    const double target = cfg.rel_tolerance * std::fabs(running);
    seen_nonzero = seen_nonzero || f_cut != 0.0 || running != 0.0;
    // an underflowed integrand only ends the search once the bulk has been seen
    if (f_cut == 0.0 && seen_nonzero) {
      tail_bound = 0.0;
      break;
    }
    if (f_back > f_cut && f_cut * cut < target) {
      const double rate = std::log(f_back / f_cut) / (0.25 * cut);
      tail_bound = f_cut / rate;
      if (tail_bound <= 0.1 * target) break;
    }
    if (cut >= kMaxCut)
      throw ConvergenceError("quadrature: integrand tail does not decay before y = 1e8", running,
                             std::numeric_limits<double>::infinity());
  }
  return refine(coarse, geometric_cuts(cut), cfg, tail_bound);
}

}  // namespace gammae
