#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace npick {

// Uniform deviates built directly from mt19937_64 bits so that a seed gives
// the same stream on every platform (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

  std::complex<double> in_disc(double radius = 1.0) {
    double r = radius * std::sqrt(uniform());
    return std::polar(r, angle());
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace npick
