#include "weights.hpp"

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace npick {

WeightFunction::WeightFunction(std::string name, Fn h, Fn dh, Fn ddh)
    : name_(std::move(name)), h_(std::move(h)), dh_(std::move(dh)), ddh_(std::move(ddh)) {
  validate();
  // Fit log|h''| against -log(1-t) on a dyadic tail grid.
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  int lo = 8, hi = 20;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int k = lo; k <= hi; ++k) {
    double t = 1.0 - std::ldexp(1.0, -k);
    double mag = std::abs(ddh_(t));
    if (!(mag > 0.0) || !std::isfinite(mag)) continue;
    double x = -std::log(1.0 - t), y = std::log(mag);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++count;
    if (count == 1) { x0 = x; y0 = y; }
    x1 = x; y1 = y;
  }
  double slope = 0.0;
  if (count >= 2) {
    double denom = count * sxx - sx * sx;
    slope = denom != 0.0 ? (count * sxy - sx * sy) / denom : (y1 - y0) / (x1 - x0);
  }
  singular_exponent_ = std::min(4.0, std::max(0.0, slope - 1.0));
}

void WeightFunction::validate() const {
  if (std::abs(h_(1.0)) > 1e-12)
    fail(ErrorCode::bad_weight, "weight must vanish at t = 1");
  const int grid = 1000;
  for (int i = 0; i < grid; ++i) {
    double t = static_cast<double>(i) / grid;
    if (dh_(t) > 1e-10)
      fail(ErrorCode::bad_weight, "weight must be nonincreasing");
    if (ddh_(t) > 1e-10)
      fail(ErrorCode::bad_weight, "weight must be concave");
    if (h_(t) < -1e-12 || h_(t) > 1.0 + 1e-9)
      fail(ErrorCode::bad_weight, "weight must map [0,1] into [0,1]");
  }
  // limsup_{r->1} |h'/h''| < 1, estimated over r = 1 - 2^{-k}.
  double tail = 0.0;
  int used = 0;
  for (int k = 12; k <= 24; ++k) {
    double t = 1.0 - std::ldexp(1.0, -k);
    double d2 = ddh_(t);
    if (d2 == 0.0 || !std::isfinite(d2)) continue;
    tail = std::max(tail, std::abs(dh_(t) / d2));
    ++used;
  }
  if (used > 0 && tail >= 1.0)
    fail(ErrorCode::bad_weight, "|h'/h''| must stay below 1 near t = 1");
}

WeightFunction WeightFunction::alpha_weight(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    fail(ErrorCode::bad_weight, "alpha weight needs alpha in (0, 1)");
  double e = 1.0 - alpha;
  return WeightFunction(
      "alpha:" + std::to_string(alpha),
      [e](double t) { return std::pow(1.0 - t, e); },
      [e](double t) { return -e * std::pow(1.0 - t, e - 1.0); },
      [e](double t) { return e * (e - 1.0) * std::pow(1.0 - t, e - 2.0); });
}

}  // namespace npick
