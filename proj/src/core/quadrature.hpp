#pragma once

#include <functional>
#include <vector>

#include "disc.hpp"
#include "weights.hpp"

namespace npick {

struct QuadratureSpec {
  double substitution_exponent = 0.0;  // 0 = derive from weight + sigma
  int radial_panels = 8;               // initial panel count
  int angular_nodes = 64;              // initial circle nodes
  double tolerance = 1e-6;             // relative
  int max_radial_panels = 1 << 12;
  int max_angular_nodes = 1 << 20;
};

// Radial weight W(r) for area integrals; alpha_power is (1-r)^{-1-alpha},
// concave_weight is |h''(r^2)|. The optional log factor multiplies by
// |log(1-r)| resp. |log(1-r^2)|.
struct RadialWeight {
  enum class Kind { alpha_power, concave_weight };

  Kind kind = Kind::alpha_power;
  double alpha = 0.5;
  const WeightFunction* h = nullptr;
  bool log_factor = false;

  // gap = 1 - r, carried separately so the weight stays accurate when r
  // rounds to 1.
  double value(double r, double gap) const;
  double value(double r) const { return value(r, 1.0 - r); }
  double singular_exponent() const;  // alpha, or fitted from h

  static RadialWeight alpha_form(double alpha, bool log_factor = false);
  static RadialWeight weight_form(const WeightFunction& h, bool log_factor = false);
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;
};

// integral over the disc of g(z) W(|z|) dA for g = o((1-|z|)^sigma) near the
// boundary (sigma declared by the caller and checked against the weight).
IntegralResult disc_integral(const std::function<double(Complex)>& g,
                             const RadialWeight& weight, double sigma,
                             const QuadratureSpec& spec = {});

// integral over the circle |z| = radius of g dtheta (unnormalized trapezoid;
// spectral for smooth periodic integrands). nodes must be a power of two >= 8.
IntegralResult circle_integral(const std::function<double(Complex)>& g,
                               double radius, int nodes, bool refine = true,
                               double tolerance = 1e-10,
                               int max_nodes = 1 << 20);

// Adaptive Simpson on [a, b] with an absolute tolerance, split at the given
// breakpoints (integrand kinks).
IntegralResult line_integral(const std::function<double(double)>& f, double a,
                             double b, double tol_abs,
                             std::vector<double> breakpoints = {});

}  // namespace npick
