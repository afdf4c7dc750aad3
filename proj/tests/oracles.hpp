// Test-side oracles, kept independent of the library's own quadrature and
// closed forms: Romberg integration, Richardson-extrapolated radial limits,
// central differences, and the two-point interpolation norm.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

// Romberg integration on [a, b] (trapezoid + Richardson).
inline double romberg(const std::function<double(double)>& f, double a,
                      double b, int max_level = 20, double tol = 1e-12) {
  std::vector<std::vector<double>> table;
  double h = b - a;
  double t = 0.5 * h * (f(a) + f(b));
  table.push_back({t});
  for (int k = 1; k <= max_level; ++k) {
    long points = 1L << (k - 1);
    double sum = 0.0;
    for (long i = 0; i < points; ++i) sum += f(a + h * (i + 0.5));
    t = 0.5 * t + 0.5 * h * sum / points;
    h *= 0.5;
    std::vector<double> row{t};
    double pow4 = 4.0;
    for (std::size_t j = 0; j < table.back().size(); ++j) {
      row.push_back((pow4 * row[j] - table.back()[j]) / (pow4 - 1.0));
      pow4 *= 4.0;
    }
    if (k > 3 &&
        std::abs(row.back() - table.back().back()) <
            tol * std::max(1.0, std::abs(row.back())))
      return row.back();
    table.push_back(std::move(row));
  }
  return table.back().back();
}

// Richardson extrapolation of (1 - |f(r e^{i t})|) / (1 - r) along r = 1-2^-k.
inline double radial_angular_derivative(
    const std::function<Complex(Complex)>& f, double theta, int k_lo = 10,
    int k_hi = 18) {
  std::vector<double> values;
  for (int k = k_lo; k <= k_hi; ++k) {
    double h = std::ldexp(1.0, -k);
    Complex z = std::polar(1.0 - h, theta);
    values.push_back((1.0 - std::abs(f(z))) / h);
  }
  // One Richardson level: F(h) = L + c h + O(h^2).
  std::vector<double> refined;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    refined.push_back(2.0 * values[i + 1] - values[i]);
  // Second level kills the h^2 term: R(h) = L + c2 h^2.
  std::vector<double> refined2;
  for (std::size_t i = 0; i + 1 < refined.size(); ++i)
    refined2.push_back((4.0 * refined[i + 1] - refined[i]) / 3.0);
  return refined2.back();
}

inline Complex central_difference(const std::function<Complex(Complex)>& f,
                                  Complex z, double h = 1e-5) {
  return (f(z + Complex{h, 0.0}) - f(z - Complex{h, 0.0})) / (2.0 * h);
}

inline double pseudohyperbolic(Complex a, Complex b) {
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

// Smallest t making the two-point problem solvable: the pseudohyperbolic
// distance of the scaled targets must not exceed that of the nodes.
inline double two_point_norm(Complex z1, Complex w1, Complex z2, Complex w2) {
  double node_distance = pseudohyperbolic(z1, z2);
  double lo = std::max(std::abs(w1), std::abs(w2));
  if (pseudohyperbolic(w1 / lo, w2 / lo) <= node_distance || lo == 0.0)
    return lo;
  double hi = 2.0;
  while (pseudohyperbolic(w1 / hi, w2 / hi) > node_distance) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (pseudohyperbolic(w1 / mid, w2 / mid) > node_distance)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracles
