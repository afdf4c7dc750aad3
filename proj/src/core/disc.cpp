#include "disc.hpp"

#include <algorithm>

namespace npick {

double pseudohyperbolic(Complex a, Complex b) {
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

MoebiusMap MoebiusMap::disc_automorphism(Complex w0) {
  return {Complex{-1.0}, w0, -std::conj(w0), Complex{1.0}};
}

bool MoebiusMap::invertible(double tol) const {
  double m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  return std::abs(det()) > tol * m * m;
}

Complex MoebiusMap::apply(Complex z) const {
  Complex denom = c * z + d;
  double scale = std::abs(c) * std::abs(z) + std::abs(d);
  if (std::abs(denom) <= 1e-14 * scale || scale == 0.0)
    fail(ErrorCode::pole_at_point, "moebius map evaluated at a pole");
  return (a * z + b) / denom;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& inner) const {
  return {a * inner.a + b * inner.c, a * inner.b + b * inner.d,
          c * inner.a + d * inner.c, c * inner.b + d * inner.d};
}

bool DyadicAnnulus::contains(Complex z) const {
  double gap = 1.0 - std::abs(z);
  if (index == 0) return gap > inner_gap();
  return gap > inner_gap() && gap <= outer_gap();
}

int annulus_index(Complex z) {
  double gap = 1.0 - std::abs(z);
  if (gap <= 0.0)
    fail(ErrorCode::invalid_argument, "annulus_index needs |z| < 1");
  if (gap > 0.5) return 0;
  int j = static_cast<int>(std::floor(-std::log2(gap)));
  while (j > 0 && gap > std::ldexp(1.0, -j)) --j;
  while (gap <= std::ldexp(1.0, -j - 1)) ++j;
  return j;
}

bool CarlesonBox::contains(Complex z) const {
  if (std::abs(z) < 1.0 - depth()) return false;
  double dth = std::remainder(std::arg(z) - theta0, two_pi);
  return std::abs(dth) <= arclen / 2.0;
}

std::vector<CarlesonBox> dyadic_boxes(int level) {
  if (level < 0 || level > 24)
    fail(ErrorCode::level_out_of_range, "box level must be in [0, 24]");
  int n = 1 << level;
  double arc = two_pi / n;
  std::vector<CarlesonBox> boxes(n);
  for (int k = 0; k < n; ++k) boxes[k] = {(k + 0.5) * arc, arc};
  return boxes;
}

std::vector<double> boundary_grid(int n) {
  std::vector<double> angles(std::max(n, 0));
  for (int k = 0; k < n; ++k) angles[k] = two_pi * k / n;
  return angles;
}

}  // namespace npick
