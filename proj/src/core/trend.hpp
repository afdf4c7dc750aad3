#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace npick {

enum class Verdict { finite, divergent, inconclusive };
const char* to_string(Verdict v);

struct GrowthFit {
  double exponent = 0.0;
  double r2 = 0.0;
};

struct PartialValue {
  double n = 0.0;      // truncation / resolution index
  double value = 0.0;  // partial sum, count, or integral
};

struct TrendOptions {
  // Finite: doubling increments decay geometrically and the extrapolated
  // tail stays below cauchy_rel_tol of the last partial value.
  double cauchy_rel_tol = 0.25;
  double decay_ratio = 0.95;
  // Divergent: increments not decaying, and a log-log fit over the tail half
  // shows positive slope with goodness above divergent_r2.
  double divergent_slope = 0.01;
  double divergent_r2 = 0.90;
  std::size_t min_points_for_divergent = 6;
};

// Least squares of log(value) against log(n) over the given points.
GrowthFit log_log_fit(const std::vector<PartialValue>& points);

Verdict classify_trend(const std::vector<PartialValue>& partials,
                       const TrendOptions& options, GrowthFit* fit_out,
                       double* tail_estimate_out);

struct ClassReport {
  std::string class_name;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  std::string weight_name;
  bool log_weight = false;
  long truncation = 0;
  double tolerance = 0.0;
  std::vector<PartialValue> partials;
  GrowthFit fit;
  Verdict verdict = Verdict::inconclusive;
  double error_estimate = 0.0;
};

}  // namespace npick
