#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace npick {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

struct GaussRule {
  std::vector<double> nodes;    // on (0, 1)
  std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on the recurrence.
GaussRule gauss_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = 0.5 * (1.0 - x);  // map [-1,1] -> [0,1], ascending
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& radial_rule() {
  static const GaussRule rule = gauss_rule(12);
  return rule;
}

}  // namespace

double RadialWeight::value(double r, double gap) const {
  switch (kind) {
    case Kind::alpha_power: {
      double w = std::pow(gap, -1.0 - alpha);
      if (log_factor) w *= std::abs(std::log(gap));
      return w;
    }
    case Kind::concave_weight: {
      double u_gap = gap * (2.0 - gap);  // 1 - r^2
      double w = std::abs(h->d2(1.0 - u_gap));
      if (log_factor) w *= std::abs(std::log(u_gap));
      return w;
    }
  }
  return 0.0;
}

double RadialWeight::singular_exponent() const {
  return kind == Kind::alpha_power ? alpha : h->singular_exponent();
}

RadialWeight RadialWeight::alpha_form(double alpha, bool log_factor) {
  if (!(alpha > 0.0 && alpha < 1.0))
    fail(ErrorCode::invalid_argument, "alpha weight needs alpha in (0, 1)");
  return {Kind::alpha_power, alpha, nullptr, log_factor};
}

RadialWeight RadialWeight::weight_form(const WeightFunction& h, bool log_factor) {
  return {Kind::concave_weight, 0.0, &h, log_factor};
}

IntegralResult circle_integral(const std::function<double(Complex)>& g,
                               double radius, int nodes, bool refine,
                               double tolerance, int max_nodes) {
  if (!is_power_of_two(nodes) || nodes < 8)
    fail(ErrorCode::invalid_argument, "node count must be a power of two >= 8");
  auto sum_at = [&](int n, int stride_offset, int step) {
    // Sum over angles (k*step + stride_offset) * 2pi / n.
    double s = 0.0;
    for (int k = stride_offset; k < n; k += step)
      s += g(std::polar(radius, two_pi * k / n));
    return s;
  };
  int n = nodes;
  double total = sum_at(n, 0, 1);
  double value = total * two_pi / n;
  double error = std::abs(value);
  if (!refine) return {value, error};
  while (n < max_nodes) {
    n *= 2;
    total += sum_at(n, 1, 2);  // new midpoints only
    double next = total * two_pi / n;
    error = std::abs(next - value);
    value = next;
    if (error <= tolerance * std::max(std::abs(value), 1.0)) return {value, error};
  }
  fail(ErrorCode::resolution_exceeded,
       "circle integral did not converge within the node cap");
}

namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  double tol;
  double worst_correction = 0.0;

  double recurse(double lo, double hi, double flo, double fhi, double fmid,
                 double whole, int depth) {
    double mid = 0.5 * (lo + hi);
    double flq = (*f)(0.5 * (lo + mid));
    double frq = (*f)(0.5 * (mid + hi));
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flq + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frq + fhi);
    double correction = left + right - whole;
    if (depth <= 0 || std::abs(correction) < 15.0 * tol) {
      worst_correction = std::max(worst_correction, std::abs(correction) / 15.0);
      return left + right + correction / 15.0;
    }
    return recurse(lo, mid, flo, fmid, flq, left, depth - 1) +
           recurse(mid, hi, fmid, fhi, frq, right, depth - 1);
  }
};

}  // namespace

IntegralResult line_integral(const std::function<double(double)>& f, double a,
                             double b, double tol_abs,
                             std::vector<double> breakpoints) {
  if (!(tol_abs > 0.0) || !(b > a))
    fail(ErrorCode::invalid_argument, "line integral needs b > a and tol > 0");
  breakpoints.push_back(a);
  breakpoints.push_back(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  double total = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    double lo = std::max(a, breakpoints[i]);
    double hi = std::min(b, breakpoints[i + 1]);
    if (hi - lo < 1e-15) continue;
    SimpsonState state{&f, tol_abs / static_cast<double>(breakpoints.size()), 0.0};
    double flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
    double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += state.recurse(lo, hi, flo, fhi, fmid, whole, 48);
    error += state.worst_correction;
  }
  return {total, error};
}

IntegralResult disc_integral(const std::function<double(Complex)>& g,
                             const RadialWeight& weight, double sigma,
                             const QuadratureSpec& spec) {
  double alpha_eff = weight.singular_exponent();
  if (sigma <= alpha_eff)
    fail(ErrorCode::non_integrable_declaration,
         "declared boundary decay does not make the weighted integrand integrable");
  double q = spec.substitution_exponent > 0.0 ? spec.substitution_exponent
                                              : 2.0 / (sigma - alpha_eff);
  if (q * (sigma - alpha_eff) < 1.0)
    fail(ErrorCode::invalid_argument,
         "substitution exponent leaves the transformed integrand unbounded");
  if (!(spec.tolerance > 0.0))
    fail(ErrorCode::invalid_argument, "tolerance must be positive");

  // Radial variable r = 1 - s^q on s in (0, 1]; ds carries q s^{q-1}.
  double angular_tol = spec.tolerance * 0.25;
  double angular_slop = 0.0;
  auto transformed = [&](double s) {
    double gap = std::pow(s, q);
    // The boundary sliver with 1 - r below the double-rounding scale
    // contributes o(gap^{sigma - alpha}); skip it rather than divide by a
    // rounded-to-zero gap.
    if (gap < 1e-15) return 0.0;
    double r = 1.0 - gap;
    if (r <= 0.0) r = 0.0;
    double mean;
    if (r == 0.0) {
      mean = two_pi * g(Complex{0.0});
    } else {
      int n = spec.angular_nodes;
      auto sum_circle = [&](int count) {
        double acc = 0.0;
        for (int k = 0; k < count; ++k)
          acc += g(std::polar(r, two_pi * (k + 0.5) / count));
        return acc * two_pi / count;
      };
      double v = sum_circle(n);
      while (true) {
        if (n >= spec.max_angular_nodes) {
          angular_slop = std::max(angular_slop, std::abs(v));
          break;
        }
        n *= 2;
        double v2 = sum_circle(n);
        double disagreement = std::abs(v2 - v);
        v = v2;
        // Mixed tolerance: circle means crossing zero must not force
        // unbounded refinement.
        if (disagreement <= angular_tol * std::max(std::abs(v), 0.01)) break;
      }
      mean = v;
    }
    double r_eval = std::max(r, 0.0);
    return mean * r_eval * weight.value(r_eval) * q * std::pow(s, q - 1.0);
  };

  const GaussRule& rule = radial_rule();
  auto level_value = [&](int panels) {
    std::vector<double> contributions(panels);
    for (int p = 0; p < panels; ++p) {
      double lo = static_cast<double>(p) / panels;
      double width = 1.0 / panels;
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * transformed(lo + width * rule.nodes[i]);
      contributions[p] = acc * width;
    }
    double total = 0.0;
    for (double c : contributions) total += c;
    return total;
  };

  int panels = std::max(2, spec.radial_panels);
  double value = level_value(panels);
  while (true) {
    if (panels * 2 > spec.max_radial_panels)
      fail(ErrorCode::quadrature_non_convergent,
           "radial refinement cap reached before the tolerance was met");
    panels *= 2;
    double next = level_value(panels);
    double disagreement = std::abs(next - value) + angular_slop;
    value = next;
    if (disagreement <= spec.tolerance * std::max(std::abs(value), 1.0))
      return {value, disagreement};
  }
}

}  // namespace npick
