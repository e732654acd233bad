#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "gammae/gamma_e.hpp"
#include "gammae/verify_report.hpp"

namespace gammae {

enum class Suite { functional, routes, ode, boundary, auxiliary, convergence, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// Runs one verification suite for (a, b). Randomized sweeps draw from a
/// 64-bit Mersenne Twister seeded with `seed`, so reports are reproducible.
VerifyReport run_suite(Suite suite, const Params& p, std::uint64_t seed);

/// Uniform double in [0, 1) from the top 53 bits of a mt19937_64 draw.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double between(double lo, double hi) { return lo + (hi - lo) * next(); }
  double log_between(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gammae
