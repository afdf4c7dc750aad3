#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace npick {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct BoundaryPoint {
  double theta = 0.0;  // in [0, 2pi)
  Complex value() const { return std::polar(1.0, theta); }
};

// |a - b| / |1 - conj(a) b|
double pseudohyperbolic(Complex a, Complex b);

// w -> (a w + b) / (c w + d)
struct MoebiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static MoebiusMap identity() { return {}; }
  // w -> (w0 - w) / (1 - conj(w0) w)
  static MoebiusMap disc_automorphism(Complex w0);
  // w -> 1 / w
  static MoebiusMap inversion() { return {Complex{0.0}, Complex{1.0}, Complex{1.0}, Complex{0.0}}; }

  Complex det() const { return a * d - b * c; }
  bool invertible(double tol = 1e-14) const;
  Complex apply(Complex z) const;          // throws PoleAtPoint
  MoebiusMap compose(const MoebiusMap& inner) const;  // this after inner
};

// Annulus j: { z : 2^{-j-1} < 1 - |z| <= 2^{-j} }. Index 0 also covers the
// central region |z| < 1/2.
struct DyadicAnnulus {
  int index = 0;
  double inner_gap() const { return std::ldexp(1.0, -index - 1); }
  double outer_gap() const { return std::ldexp(1.0, -index); }
  bool contains(Complex z) const;
};

int annulus_index(Complex z);

// Box over the arc |theta - theta0| <= arclen/2 with depth arclen / (2 pi),
// i.e. the radial range 1 - arclen/(2 pi) <= |z| < 1.
struct CarlesonBox {
  double theta0 = 0.0;
  double arclen = two_pi;

  double depth() const { return arclen / two_pi; }
  bool contains(Complex z) const;
};

std::vector<CarlesonBox> dyadic_boxes(int level);  // 2^level boxes tiling the circle
std::vector<double> boundary_grid(int n);          // n equispaced angles in [0, 2pi)

}  // namespace npick
