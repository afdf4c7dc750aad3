#pragma once

#include <functional>
#include <string>

namespace npick {

// Weight h : [0,1] -> [0,1], twice differentiable, nonincreasing, concave,
// h(1) = 0, with limsup_{r->1} |h'(r)/h''(r)| < 1. Validation runs on a
// 10^3-point grid plus a dyadic tail grid.
class WeightFunction {
 public:
  using Fn = std::function<double(double)>;

  WeightFunction(std::string name, Fn h, Fn dh, Fn ddh);

  // h(t) = (1 - t)^{1 - alpha} for alpha in (0, 1).
  static WeightFunction alpha_weight(double alpha);

  double operator()(double t) const { return h_(t); }
  double d1(double t) const { return dh_(t); }
  double d2(double t) const { return ddh_(t); }
  const std::string& name() const { return name_; }

  // Fitted p such that |h''(t)| grows like (1 - t)^{-p} near t = 1; used to
  // pick the quadrature substitution. Clamped into [0, 4].
  double singular_exponent() const { return singular_exponent_; }

 private:
  void validate() const;

  std::string name_;
  Fn h_, dh_, ddh_;
  double singular_exponent_ = 0.0;
};

}  // namespace npick
