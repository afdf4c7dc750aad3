#include "trend.hpp"

#include <algorithm>
#include <cmath>

namespace npick {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::finite: return "finite";
    case Verdict::divergent: return "divergent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

GrowthFit log_log_fit(const std::vector<PartialValue>& points) {
  GrowthFit fit;
  std::vector<double> xs, ys;
  for (const PartialValue& p : points) {
    if (p.n > 0.0 && p.value > 0.0) {
      xs.push_back(std::log(p.n));
      ys.push_back(std::log(p.value));
    }
  }
  std::size_t n = xs.size();
  if (n < 2) return fit;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
  mx /= n; my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) return fit;
  fit.exponent = sxy / sxx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

Verdict classify_trend(const std::vector<PartialValue>& partials,
                       const TrendOptions& options, GrowthFit* fit_out,
                       double* tail_estimate_out) {
  if (tail_estimate_out) *tail_estimate_out = 0.0;
  std::size_t m = partials.size();
  std::vector<PartialValue> tail_half(
      partials.begin() + static_cast<long>(m / 2), partials.end());
  GrowthFit fit = log_log_fit(tail_half);
  if (fit_out) *fit_out = fit;
  if (m < 3) return Verdict::inconclusive;

  // Increments per doubling, normalized by the width of each schedule step
  // (the last step is usually a partial doubling).
  std::vector<double> increments;
  for (std::size_t i = 1; i < m; ++i) {
    double width = std::log2(partials[i].n / partials[i - 1].n);
    if (width <= 0.0) continue;
    increments.push_back((partials[i].value - partials[i - 1].value) / width);
  }
  if (increments.size() < 2) return Verdict::inconclusive;
  double scale = std::max(std::abs(partials.back().value), 1e-300);

  // Geometric decay of the doubling increments characterizes convergence;
  // the extrapolated geometric tail bounds the truncation error.
  std::size_t look = std::min<std::size_t>(3, increments.size() - 1);
  bool decaying = true;
  double worst_ratio = 0.0;
  for (std::size_t i = increments.size() - 1 - look; i + 1 < increments.size();
       ++i) {
    double a = std::abs(increments[i]), b = std::abs(increments[i + 1]);
    if (a == 0.0 && b == 0.0) continue;
    if (a == 0.0) { decaying = false; break; }
    worst_ratio = std::max(worst_ratio, b / a);
  }
  if (decaying && worst_ratio <= options.decay_ratio) {
    double d = std::abs(increments.back());
    double tail = worst_ratio < 1.0 ? d * worst_ratio / (1.0 - worst_ratio) : d;
    if (tail_estimate_out) *tail_estimate_out = tail;
    if (tail <= options.cauchy_rel_tol * scale) return Verdict::finite;
    return Verdict::inconclusive;
  }

  bool increasing = partials.back().value > partials.front().value;
  if (m >= options.min_points_for_divergent && increasing &&
      fit.exponent >= options.divergent_slope && fit.r2 >= options.divergent_r2)
    return Verdict::divergent;
  return Verdict::inconclusive;
}

}  // namespace npick
