#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "classes.hpp"
#include "contour.hpp"
#include "errors.hpp"
#include "gen.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "schur.hpp"

namespace npick {

bool CriterionResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

bool RunReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.pass(); });
}

std::string RunReport::first_failing_anchor() const {
  for (const CriterionResult& c : criteria)
    for (const CheckResult& check : c.checks)
      if (!check.pass) return check.anchor;
  return {};
}

namespace {

struct Checks {
  std::vector<CheckResult> list;

  // pass when measured <= tolerance
  void upper(const std::string& name, const std::string& anchor, double measured,
             double tolerance, std::string detail = {}) {
    list.push_back({name, anchor, measured <= tolerance, measured, tolerance,
                    std::move(detail)});
  }
  // pass when measured >= tolerance
  void lower(const std::string& name, const std::string& anchor, double measured,
             double tolerance, std::string detail = {}) {
    list.push_back({name, anchor, measured >= tolerance, measured, tolerance,
                    std::move(detail)});
  }
  void boolean(const std::string& name, const std::string& anchor, bool ok,
               std::string detail = {}) {
    list.push_back({name, anchor, ok, ok ? 1.0 : 0.0, 1.0, std::move(detail)});
  }
};

std::uint64_t subseed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27; x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// ---------------------------------------------------------------------------
// Criterion 1: interpolation and chain invariants on seeded problems.
// ---------------------------------------------------------------------------
CriterionResult criterion_invariants(std::uint64_t seed, int budget) {
  CriterionResult out{1, "interpolation and parametrization invariants", {}, 0.0};
  Checks checks;
  int problems = budget >= 1 ? 100 : 20;
  int z_samples = budget >= 1 ? 200 : 50;
  int boundary_samples = budget >= 1 ? 64 : 16;

  double worst_interp = 0.0, worst_det = 0.0, worst_s0 = 0.0;
  double worst_dominance = -1.0, worst_boundary = 0.0;
  for (int i = 0; i < problems; ++i) {
    Rng rng(subseed(seed, 100 + i));
    int n = 1 + static_cast<int>(rng.next() % 16);
    double scale = rng.uniform(0.2, 0.7);
    PickProblem problem = scaled_problem(rng, n, scale);
    Parametrization param = Parametrization::build(problem);
    const BlaschkeProduct& node_product = param.node_product();

    for (int g = 0; g < 16; ++g) {
      double gamma = two_pi * g / 16;
      for (std::size_t k = 0; k < problem.size(); ++k) {
        Complex residual =
            param.extremal(gamma, problem.nodes[k]) - problem.targets[k];
        worst_interp = std::max(worst_interp, std::abs(residual));
      }
    }
    NevanlinnaCoefficients at0 = param.coefficients_at(Complex{0.0});
    worst_s0 = std::max(worst_s0, std::abs(at0.s));
    for (int s = 0; s < z_samples; ++s) {
      Complex z = rng.in_disc(0.97);
      NevanlinnaCoefficients c = param.coefficients_at(z);
      Complex pi_z = node_product.value(z);
      double det_err = std::abs(c.p * c.s - c.q * c.r - pi_z) /
                       std::max(std::abs(pi_z), 1e-12);
      worst_det = std::max(worst_det, det_err);
      double dom = std::abs(c.r) -
                   std::max({std::abs(c.p), std::abs(c.q), std::abs(c.s), 1.0});
      worst_dominance = std::max(worst_dominance, -dom);
    }
    for (int sIdx = 0; sIdx < boundary_samples; ++sIdx) {
      Complex z = std::polar(1.0, two_pi * sIdx / boundary_samples);
      NevanlinnaCoefficients c = param.coefficients_at(z);
      Complex pi_z = node_product.value(z);
      worst_boundary = std::max(
          worst_boundary, std::abs(c.q + pi_z * std::conj(c.r)));
      worst_boundary = std::max(
          worst_boundary, std::abs(c.p + pi_z * std::conj(c.s)));
    }
  }
  checks.upper("interpolation", "max_n |I_gamma(z_n) - w_n|", worst_interp, 1e-9);
  checks.upper("determinant", "P*S - Q*R = Pi (relative)", worst_det, 1e-9);
  checks.upper("normalization", "S(0) = 0", worst_s0, 1e-10);
  checks.upper("dominance", "|R| > max(|P|,|Q|,|S|,1)", worst_dominance, 1e-9);
  checks.upper("boundary-relations", "Q = -Pi*conj(R), P = -Pi*conj(S) on |z|=1",
               worst_boundary, 1e-8);
  out.checks = std::move(checks.list);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 2: value-disc geometry.
// ---------------------------------------------------------------------------
CriterionResult criterion_vertevorrat(std::uint64_t seed, int budget) {
  CriterionResult out{2, "vertevorrat geometry", {}, 0.0};
  Checks checks;
  int problems = budget >= 1 ? 20 : 5;
  double worst_circle = 0.0, worst_inside = 0.0, worst_node_rho = 0.0,
         worst_node_center = 0.0;
  for (int i = 0; i < problems; ++i) {
    Rng rng(subseed(seed, 200 + i));
    int n = 2 + static_cast<int>(rng.next() % 8);
    PickProblem problem = scaled_problem(rng, n, rng.uniform(0.3, 0.7));
    Parametrization param = Parametrization::build(problem);
    for (int s = 0; s < 40; ++s) {
      Complex z = rng.in_disc(0.95);
      Vertevorrat disc = param.vertevorrat(z);
      for (int g = 0; g < 8; ++g) {
        Complex v = param.extremal(two_pi * g / 8, z);
        worst_circle = std::max(
            worst_circle, std::abs(std::abs(v - disc.center) - disc.radius));
      }
      for (int c = 0; c < 8; ++c) {
        Complex w = rng.in_disc(1.0);
        Complex v = param.solve_with_constant(w, z);
        worst_inside = std::max(
            worst_inside, std::abs(v - disc.center) - disc.radius);
      }
    }
    for (std::size_t k = 0; k < problem.size(); ++k) {
      Vertevorrat disc = param.vertevorrat(problem.nodes[k]);
      worst_node_rho = std::max(worst_node_rho, disc.radius);
      worst_node_center = std::max(
          worst_node_center, std::abs(disc.center - problem.targets[k]));
    }
  }
  checks.upper("extremal-on-circle", "|I_gamma(z) - c(z)| = rho(z)", worst_circle,
               1e-9);
  checks.upper("constant-inside", "solutions take values in disc(c(z), rho(z))",
               worst_inside, 1e-9);
  checks.upper("node-radius", "rho(z_n) = 0", worst_node_rho, 1e-9);
  checks.upper("node-center", "c(z_n) = w_n", worst_node_center, 1e-9);
  out.checks = std::move(checks.list);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 3: radius bounds (1 - eta)|Pi| <= rho <= |Pi| for scaled problems.
// ---------------------------------------------------------------------------
CriterionResult criterion_radius_bounds(std::uint64_t seed, int budget) {
  CriterionResult out{3, "vertevorrat radius against the node product", {}, 0.0};
  Checks checks;
  int problems = budget >= 1 ? 3 : 1;
  int base_samples = budget >= 1 ? 10000 : 2000;
  double worst_upper = 0.0;
  double worst_eta = 1.0;
  double worst_eta_drift = 0.0;
  bool bins_monotone = true;
  std::string bin_detail;

  for (int i = 0; i < problems; ++i) {
    Rng rng(subseed(seed, 300 + i));
    int n = 4 + static_cast<int>(rng.next() % 5);
    PickProblem problem = scaled_problem(rng, n, rng.uniform(0.35, 0.65));
    Parametrization param = Parametrization::build(problem);
    const BlaschkeProduct& node_product = param.node_product();

    int total = 2 * base_samples;
    std::vector<double> rho(total), pi_mod(total);
    std::vector<Complex> pts(total);
    Rng sampler(subseed(seed, 310 + i));
    for (int k = 0; k < total; ++k) pts[k] = sampler.in_disc(1.0);
    parallel_for(static_cast<std::size_t>(total), [&](std::size_t k) {
      rho[k] = param.vertevorrat(pts[k]).radius;
      pi_mod[k] = std::abs(node_product.value(pts[k]));
    });

    auto min_ratio = [&](int count) {
      double m = 1.0;
      for (int k = 0; k < count; ++k)
        if (pi_mod[k] > 1e-6) m = std::min(m, rho[k] / pi_mod[k]);
      return m;
    };
    for (int k = 0; k < total; ++k)
      worst_upper = std::max(worst_upper, rho[k] - pi_mod[k]);
    double eta_half = min_ratio(base_samples);
    double eta_full = min_ratio(total);
    worst_eta = std::min(worst_eta, eta_full);
    worst_eta_drift = std::max(
        worst_eta_drift, std::abs(eta_full - eta_half) / std::max(eta_half, 1e-12));

    // Bin by |Pi| in [1 - 2^-m, 1 - 2^-m-1); min rho per bin must be
    // nondecreasing toward the boundary (bins below 50 samples are skipped).
    std::map<int, std::pair<double, int>> bins;
    for (int k = 0; k < total; ++k) {
      if (pi_mod[k] <= 0.0 || pi_mod[k] >= 1.0) continue;
      int m = static_cast<int>(std::floor(-std::log2(1.0 - pi_mod[k])));
      auto& [min_rho, count] = bins[m];
      min_rho = count == 0 ? rho[k] : std::min(min_rho, rho[k]);
      ++count;
    }
    double prev = -1.0;
    for (const auto& [m, entry] : bins) {
      if (entry.second < 50) continue;
      if (entry.first < prev - 1e-12) {
        bins_monotone = false;
        bin_detail = "bin " + std::to_string(m) + " broke monotonicity";
      }
      prev = entry.first;
    }
  }
  checks.upper("radius-upper", "rho(z) <= |Pi(z)|", worst_upper, 1e-9);
  checks.lower("radius-lower", "min rho/|Pi| stays above a positive floor",
               worst_eta, 0.01);
  checks.upper("radius-lower-stability",
               "min rho/|Pi| stable under doubling the sample count",
               worst_eta_drift, 0.20);
  checks.boolean("binned-monotone", "min rho over |Pi|-bins is nondecreasing",
                 bins_monotone, bin_detail);
  out.checks = std::move(checks.list);
  return out;
}

// Shared helper: sup over boundary grid and gamma grid of |I'_gamma| / |Pi'|.
double boundary_derivative_ratio(const Parametrization& param, int grid,
                                 int gamma_count) {
  const BlaschkeProduct& node_product = param.node_product();
  std::vector<double> sup(grid, 0.0);
  parallel_for(static_cast<std::size_t>(grid), [&](std::size_t k) {
    double theta = two_pi * k / grid;
    Complex z = std::polar(1.0, theta);
    NevanlinnaJet jet = param.jet_at(z);
    double pi_deriv = node_product.angular_derivative_modulus(theta);
    double best = 0.0;
    for (int g = 0; g < gamma_count; ++g) {
      Complex e = std::polar(1.0, two_pi * g / gamma_count);
      Complex denom = jet.r - jet.s * e;
      Complex deriv = ((jet.dp - jet.dq * e) * denom -
                       (jet.p - jet.q * e) * (jet.dr - jet.ds * e)) /
                      (denom * denom);
      best = std::max(best, std::abs(deriv));
    }
    sup[k] = best / pi_deriv;
  });
  return *std::max_element(sup.begin(), sup.end());
}

PickProblem power_family_problem(std::uint64_t seed, int node_count) {
  ZeroSequence nodes = ZeroSequence::power(2.0, AngleRule::equidistributed,
                                           node_count);
  Rng rng(subseed(seed, 4000));
  return scaled_problem_on_nodes(rng, nodes.zeros(), 0.5);
}

// ---------------------------------------------------------------------------
// Criterion 4: |I'_gamma| <= C |Pi'| on the boundary, stable in grid and N.
// ---------------------------------------------------------------------------
CriterionResult criterion_derivative_ratio(std::uint64_t seed, int budget) {
  CriterionResult out{4, "boundary derivative ratio |I'_gamma| / |Pi'|", {}, 0.0};
  Checks checks;
  int grid = budget >= 1 ? (1 << 12) : (1 << 9);
  int gammas = 32;

  PickProblem base = power_family_problem(seed, 8);
  Parametrization param = Parametrization::build(base);
  double ratio_coarse = boundary_derivative_ratio(param, grid, gammas);
  double ratio_fine = boundary_derivative_ratio(param, grid * 2, gammas);
  checks.boolean("ratio-finite", "sup |I'_gamma|/|Pi'| finite",
                 std::isfinite(ratio_fine) && ratio_fine > 0.0,
                 "sup ratio " + format_double(ratio_fine));
  checks.upper("ratio-grid-stable",
               "sup ratio changes by at most 10% when the grid doubles",
               std::abs(ratio_fine - ratio_coarse) / ratio_coarse, 0.10);

  double r8 = ratio_coarse;
  Parametrization p16 = Parametrization::build(power_family_problem(seed, 16));
  Parametrization p32 = Parametrization::build(power_family_problem(seed, 32));
  double r16 = boundary_derivative_ratio(p16, grid, gammas);
  double r32 = boundary_derivative_ratio(p32, grid, gammas);
  double growth = std::max(r16 / r8, std::max(r32 / r16, r32 / r8));
  checks.upper("ratio-no-growth",
               "sup ratio does not grow along the generator family (N=8,16,32)",
               growth, 1.10,
               "ratios " + format_double(r8) + ", " + format_double(r16) + ", " +
                   format_double(r32));
  out.checks = std::move(checks.list);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 5: weak-type domination of M I'_gamma by M Pi'.
// ---------------------------------------------------------------------------
double weak_sup(const std::vector<double>& sorted_maxima, double lambda_scale,
                int samples) {
  double sup = 0.0;
  for (int m = 0; m <= 20; ++m) {
    double lambda = std::ldexp(1.0, m);
    double threshold = lambda * lambda_scale;
    auto it = std::lower_bound(sorted_maxima.begin(), sorted_maxima.end(),
                               threshold);
    double measure =
        two_pi * static_cast<double>(sorted_maxima.end() - it) / samples;
    sup = std::max(sup, lambda * measure);
  }
  return sup;
}

std::vector<double> cone_maxima(const InnerFunction& f, int samples,
                                const ConeSpec& cone) {
  std::vector<double> maxima(samples);
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t k) {
    maxima[k] = nontangential_max(f, two_pi * k / samples, cone);
  });
  std::sort(maxima.begin(), maxima.end());
  return maxima;
}

CriterionResult criterion_weak_type(std::uint64_t seed, int budget) {
  CriterionResult out{5, "weak-type bound for extremal derivatives", {}, 0.0};
  Checks checks;
  int samples = budget >= 1 ? (1 << 12) : (1 << 9);
  ConeSpec cone;

  ZeroSequence nodes =
      ZeroSequence::exponential(1, AngleRule::equidistributed, 8);
  Rng rng(subseed(seed, 500));
  PickProblem problem = scaled_problem_on_nodes(rng, nodes.zeros(), 0.5);
  Parametrization param = Parametrization::build(problem);

  double c_emp = boundary_derivative_ratio(param, samples, 32);
  std::vector<double> pi_maxima =
      cone_maxima(param.node_product(), samples, cone);
  double rhs = c_emp * weak_sup(pi_maxima, 1.0 / c_emp, samples);

  double worst = 0.0;
  for (int g = 0; g < 4; ++g) {
    InnerPtr extremal = param.extremal_function(two_pi * g / 4 + 0.37);
    std::vector<double> maxima = cone_maxima(*extremal, samples, cone);
    double lhs = weak_sup(maxima, 1.0, samples);
    worst = std::max(worst, lhs / rhs);
  }
  checks.upper("weak-type-domination",
               "sup_l l|{M I'_gamma >= l}| <= C sup_l l|{M Pi' >= l/C}|", worst,
               1.10, "C = " + format_double(c_emp));
  out.checks = std::move(checks.list);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 6: gamma averages recover P/R, delta S/R, delta/R; |Q/R| = 1.
// ---------------------------------------------------------------------------
CriterionResult criterion_averaging(std::uint64_t seed, int budget) {
  CriterionResult out{6, "averages of the extremal family", {}, 0.0};
  Checks checks;
  int z_samples = budget >= 1 ? 50 : 10;
  Rng rng(subseed(seed, 600));
  PickProblem problem = scaled_problem(rng, 6, 0.4, 0.7);
  Parametrization param = Parametrization::build(problem);

  double worst_avg = 0.0, worst_tilde_s = 0.0, worst_tilde_r = 0.0;
  for (int k = 0; k < z_samples; ++k) {
    Complex z = rng.in_disc(0.6);
    worst_avg = std::max(
        worst_avg,
        std::abs(param.average_extremal(z, 64) -
                 param.coefficient_ratio(CoefficientRatio::p_over_r, z)));
    worst_tilde_s = std::max(
        worst_tilde_s,
        std::abs(param.average_tilde(z, 0.25, TildeVariant::s_over_r, 64) -
                 0.25 * param.coefficient_ratio(CoefficientRatio::s_over_r, z)));
    worst_tilde_r = std::max(
        worst_tilde_r,
        std::abs(param.average_tilde(z, 0.25, TildeVariant::one_over_r, 64) -
                 0.25 * param.coefficient_ratio(CoefficientRatio::one_over_r, z)));
  }
  double worst_qr = 0.0;
  for (int i = 0; i < 256; ++i) {
    Complex z = std::polar(1.0, two_pi * i / 256);
    worst_qr = std::max(
        worst_qr,
        std::abs(std::abs(param.coefficient_ratio(CoefficientRatio::q_over_r, z)) -
                 1.0));
  }
  checks.upper("average-extremal", "mean over gamma of I_gamma(z) = (P/R)(z)",
               worst_avg, 1e-8);
  checks.upper("average-tilde-s", "tilde average recovers delta*(S/R)(z)",
               worst_tilde_s, 1e-8);
  checks.upper("average-tilde-r", "tilde average recovers delta*(1/R)(z)",
               worst_tilde_r, 1e-8);
  checks.upper("qr-boundary", "|Q/R| = 1 on the circle", worst_qr, 1e-8);
  out.checks = std::move(checks.list);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 7: constant-target family matches its closed form.
// ---------------------------------------------------------------------------
CriterionResult criterion_constant_target(std::uint64_t seed, int budget) {
  CriterionResult out{7, "constant-target closed form", {}, 0.0};
  Checks checks;
  ZeroSequence nodes = ZeroSequence::power(2.0, AngleRule::equidistributed, 8);
  Complex w{0.3, 0.2};
  std::vector<Complex> targets(nodes.size(), w);
  PickProblem problem = PickProblem::create(nodes.zeros(), targets);
  Parametrization param = Parametrization::build(problem);
  const BlaschkeProduct& node_product = param.node_product();

  Rng rng(subseed(seed, 700));
  Complex z_ref{0.31, 0.17};
  Complex pi_ref = node_product.value(z_ref);

  int gammas = 16;
  int z_count = budget >= 1 ? 20 : 5;
  double worst_unimodular = 0.0, worst_match = 0.0;
  for (int g = 0; g < gammas; ++g) {
    double gamma = two_pi * g / gammas;
    Complex v_ref = param.extremal(gamma, z_ref);
    // Fit the reparametrized unimodular parameter from the reference point.
    Complex u = (v_ref - w) / (pi_ref * (1.0 - std::conj(w) * v_ref));
    worst_unimodular = std::max(worst_unimodular, std::abs(std::abs(u) - 1.0));
    for (int k = 0; k < z_count; ++k) {
      Complex z = rng.in_disc(0.8);
      Complex pi_z = node_product.value(z);
      Complex closed = (w + pi_z * u) / (1.0 + std::conj(w) * pi_z * u);
      worst_match = std::max(worst_match,
                             std::abs(param.extremal(gamma, z) - closed));
    }
  }
  checks.upper("reparametrization-unimodular",
               "fitted parameter is unimodular", worst_unimodular, 1e-8);
  checks.upper("closed-form-match",
               "I_gamma = (w + Pi u)/(1 + conj(w) Pi u) pointwise", worst_match,
               1e-8);

  // The map gamma -> boundary derivative norm is not constant across the
  // family, so membership diagnostics genuinely depend on gamma.
  int bgrid = 512;
  double lo = 1e300, hi = -1e300;
  for (int g = 0; g < 8; ++g) {
    double gamma = two_pi * g / 8;
    double acc = 0.0;
    for (int i = 0; i < bgrid; ++i) {
      double theta = two_pi * (i + 0.5) / bgrid;
      Complex z = std::polar(1.0, theta);
      acc += std::sqrt(std::abs(param.extremal_derivative(gamma, z)));
    }
    acc /= bgrid;
    lo = std::min(lo, acc);
    hi = std::max(hi, acc);
  }
  checks.lower("family-not-constant",
               "gamma-to-derivative-norm map varies across the family",
               (hi - lo) / std::max(lo, 1e-300), 0.01);
  out.checks = std::move(checks.list);
  return out;
}

// Independent 1-D radial oracle: adaptive Simpson on the substituted
// integrand, used as the regression target for the area quadrature.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int depth) {
  double c = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fc = f(c);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
  std::function<double(double, double, double, double, double, double, int)>
      recurse = [&](double lo, double hi, double flo, double fhi, double fmid,
                    double acc, int d) -> double {
    double mid = 0.5 * (lo + hi);
    double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    double flmid = f(lmid), frmid = f(rmid);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
    if (d <= 0 || std::abs(left + right - acc) < 15.0 * tol)
      return left + right + (left + right - acc) / 15.0;
    return recurse(lo, mid, flo, fmid, flmid, left, d - 1) +
           recurse(mid, hi, fmid, fhi, frmid, right, d - 1);
  };
  return recurse(a, b, fa, fb, fc, whole, depth);
}

double radial_oracle_log_kernel(double alpha) {
  // integral over the disc of log|z|^{-1} (1-|z|)^{-1-alpha} dA, computed as
  // 2 pi int_0^1 r log(1/r) (1-r)^{-1-alpha} dr with 1 - r = s^2.
  auto f = [alpha](double s) {
    double r = 1.0 - s * s;
    if (r <= 0.0) return 0.0;
    double w = std::pow(s * s, -1.0 - alpha) * 2.0 * s;
    return r * std::log(1.0 / r) * w;
  };
  return two_pi * adaptive_simpson(f, 1e-12, 1.0, 1e-12, 40);
}

// ---------------------------------------------------------------------------
// Criterion 8: weighted area integrals against the zero sums.
// ---------------------------------------------------------------------------
CriterionResult criterion_area_integrals(std::uint64_t seed, int budget) {
  CriterionResult out{8, "weighted area integrals and the zero-sum identity", {}, 0.0};
  Checks checks;

  BlaschkeProduct single_zero{ZeroSequence({Complex{0.0}})};
  ClassReport integral = carleson_integral_alpha(single_zero, 0.5, false, 1e-6);
  double oracle = radial_oracle_log_kernel(0.5);
  checks.upper("alpha-integral-regression",
               "area integral of log|B|^{-1} (1-|z|)^{-3/2} matches the radial oracle",
               std::abs(integral.partials[0].value - oracle) / oracle, 1e-4,
               "oracle " + format_double(oracle));

  GreenCheck green = green_identity_check(
      BlaschkeProduct{ZeroSequence({Complex{0.5, 0.0}})}, 0.5, 1e-3);
  checks.upper("laplacian-fd", "analytic Laplacian matches central differences",
               green.fd_max_rel_error, 1e-3);

  // Family fit: sum side against the two integral terms, refit on halves.
  // Eight single-zero products sweep the radius; two multi-zero products are
  // seeded.
  int family = 10;
  std::vector<double> sums, t1, t2;
  for (int i = 0; i < family; ++i) {
    std::vector<Complex> zeros;
    if (i < 8) {
      zeros.push_back(std::polar(0.35 + 0.07 * i, 0.4 * i));
    } else {
      Rng rng(subseed(seed, 800 + i));
      int count = 2 + static_cast<int>(rng.next() % 2);
      for (int k = 0; k < count; ++k)
        zeros.push_back(std::polar(rng.uniform(0.35, 0.85), rng.angle()));
    }
    GreenCheck g = green_identity_check(BlaschkeProduct{ZeroSequence(zeros)},
                                        0.5, (budget >= 1 ? 1e-6 : 1e-4));
    sums.push_back(g.sum_side);
    t1.push_back(g.term_log);
    t2.push_back(g.term_rest);
  }
  auto fit_ab = [&](int lo, int hi) {
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (int i = lo; i < hi; ++i) {
      a11 += t1[i] * t1[i];
      a12 += t1[i] * t2[i];
      a22 += t2[i] * t2[i];
      b1 += t1[i] * sums[i];
      b2 += t2[i] * sums[i];
    }
    double det = a11 * a22 - a12 * a12;
    return std::pair<double, double>{(b1 * a22 - b2 * a12) / det,
                                     (a11 * b2 - a12 * b1) / det};
  };
  auto [a_full, b_full] = fit_ab(0, family);
  auto [a_lo, b_lo] = fit_ab(0, family / 2);
  auto [a_hi, b_hi] = fit_ab(family / 2, family);
  double drift = std::max(
      {std::abs(a_lo - a_full) / std::abs(a_full),
       std::abs(a_hi - a_full) / std::abs(a_full),
       std::abs(b_lo - b_full) / std::abs(b_full),
       std::abs(b_hi - b_full) / std::abs(b_full)});
  checks.upper("green-family-fit",
               "fitted constants of the sum-vs-integral relation are stable",
               drift, 0.05,
               "a = " + format_double(a_full) + ", b = " + format_double(b_full));

  // Verdict agreement: finite products give finite sums and finite integrals.
  // Half the family comes from the geometric generator, half is random. Zeros
  // stay at dyadic depth >= 2^-9 so the angular node cap resolves the
  // log spikes of |B| near its zeros.
  bool agree = true;
  QuadratureSpec area_spec;
  area_spec.tolerance = 1e-3;
  area_spec.max_angular_nodes = 1 << 14;
  area_spec.max_radial_panels = 1 << 11;
  for (int i = 0; i < (budget >= 1 ? 10 : 4); ++i) {
    Rng rng(subseed(seed, 900 + i));
    ZeroSequence zeros =
        i % 2 == 0
            ? ZeroSequence::exponential(1, AngleRule::random, 8, 0.0,
                                        subseed(seed, 920 + i))
            : random_zeros(rng, 4 + static_cast<int>(rng.next() % 5), 0.85);
    ClassReport sum =
        weighted_zero_sum(zeros, WeightFunction::alpha_weight(0.5), false);
    ClassReport area = carleson_integral_alpha(BlaschkeProduct{zeros}, 0.5,
                                               false, area_spec.tolerance,
                                               area_spec);
    if (sum.verdict != Verdict::finite || area.verdict != Verdict::finite)
      agree = false;
  }
  checks.boolean("verdict-agreement",
                 "zero-sum and area-integral verdicts agree on finite products",
                 agree);
  out.checks = std::move(checks.list);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 9: class diagnostics sanity.
// ---------------------------------------------------------------------------
CriterionResult criterion_class_sanity(std::uint64_t seed, int budget) {
  CriterionResult out{9, "class diagnostics sanity", {}, 0.0};
  Checks checks;
  (void)seed;

  AnnulusCounts one = exponential_bound(
      ZeroSequence::exponential(1, AngleRule::fixed, 12));
  AnnulusCounts three = exponential_bound(
      ZeroSequence::exponential(3, AngleRule::equidistributed, 8));
  checks.boolean("annulus-count",
                 "per-annulus zero counts match the generator bound",
                 one.bound == 1 && three.bound == 3,
                 "bounds " + std::to_string(one.bound) + ", " +
                     std::to_string(three.bound));

  int truncation = budget >= 1 ? 10000 : 2000;
  auto verdict_for = [&](double p, double alpha) {
    ZeroSequence zeros = ZeroSequence::power(p, AngleRule::fixed, truncation);
    return weighted_zero_sum(zeros, WeightFunction::alpha_weight(alpha), false)
        .verdict;
  };
  bool verdicts_ok = verdict_for(3.0, 0.5) == Verdict::finite &&
                     verdict_for(1.9, 0.5) == Verdict::divergent &&
                     verdict_for(4.0, 0.75) == Verdict::divergent;
  checks.boolean("power-family-verdicts",
                 "zero-sum verdicts follow p(1-alpha) against 1", verdicts_ok);

  Rng rng(subseed(seed, 950));
  std::vector<Complex> zeros(4);
  for (Complex& z : zeros) z = std::polar(rng.uniform(0.3, 0.75), rng.angle());
  BlaschkeProduct product{ZeroSequence(zeros)};
  ClassReport norm = hardy_derivative_norm(product, 0.5, {1, 14}, 1e-5);
  IntegralResult boundary = circle_integral(
      [&product](Complex z) {
        return std::sqrt(product.angular_derivative_modulus(std::arg(z)));
      },
      1.0, 512, true, 1e-7);
  double boundary_avg = boundary.value / two_pi;
  double measured = std::abs(norm.partials.back().value - boundary_avg) /
                    boundary_avg;
  checks.upper("derivative-norm-quadrature",
               "radial derivative norms match the boundary quadrature",
               measured, 1e-3);
  checks.boolean("derivative-norm-finite",
                 "derivative norm of a finite product is finite",
                 norm.verdict == Verdict::finite);
  out.checks = std::move(checks.list);
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 10: level-set contours and the box-normalized length.
// ---------------------------------------------------------------------------
CriterionResult criterion_contours(std::uint64_t seed, int budget) {
  CriterionResult out{10, "level-set contours", {}, 0.0};
  Checks checks;

  BlaschkeProduct identity_product{ZeroSequence({Complex{0.0}})};
  ContourEstimate circle = level_contour(identity_product, 0.5, 1 << 9);
  checks.upper("circle-length", "level set of |z| at 0.5 has length pi",
               std::abs(circle.total_length - pi) / pi, 0.01);

  bool enclosed = true;
  std::string enclosure_detail;
  int products = budget >= 1 ? 20 : 5;
  for (int i = 0; i < products && enclosed; ++i) {
    Rng rng(subseed(seed, 1000 + i));
    ZeroSequence zeros = random_zeros(rng, 2 + static_cast<int>(rng.next() % 5), 0.8);
    try {
      level_contour(BlaschkeProduct{zeros}, 0.25, 1 << 9);
    } catch (const Error& e) {
      enclosed = false;
      enclosure_detail = e.what();
    }
  }
  checks.boolean("zero-enclosure", "every zero is enclosed by a level curve",
                 enclosed, enclosure_detail);

  ZeroSequence deep = ZeroSequence::exponential(1, AngleRule::equidistributed, 10);
  ContourEstimate contour = level_contour(BlaschkeProduct{deep}, 0.3, 1 << 12);
  CarlesonNormEstimate norm = carleson_norm(contour, 10);
  double lo = 1e300, hi = 0.0;
  for (int l = 6; l <= 10; ++l) {
    lo = std::min(lo, norm.cumulative[l]);
    hi = std::max(hi, norm.cumulative[l]);
  }
  checks.upper("carleson-norm-stable",
               "box-normalized length stays within a factor 2 over levels 6..10",
               hi / lo, 2.0,
               "levels 6..10: " + format_double(lo) + " .. " + format_double(hi));
  out.checks = std::move(checks.list);
  return out;
}

}  // namespace

CriterionResult run_criterion(int index, std::uint64_t seed, int budget) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  switch (index) {
    case 1: result = criterion_invariants(seed, budget); break;
    case 2: result = criterion_vertevorrat(seed, budget); break;
    case 3: result = criterion_radius_bounds(seed, budget); break;
    case 4: result = criterion_derivative_ratio(seed, budget); break;
    case 5: result = criterion_weak_type(seed, budget); break;
    case 6: result = criterion_averaging(seed, budget); break;
    case 7: result = criterion_constant_target(seed, budget); break;
    case 8: result = criterion_area_integrals(seed, budget); break;
    case 9: result = criterion_class_sanity(seed, budget); break;
    case 10: result = criterion_contours(seed, budget); break;
    default: fail(ErrorCode::invalid_argument, "criterion index must be 1..10");
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (index == 1) {
    CheckResult runtime{"runtime", "criterion completes within 60 s",
                        result.wall_seconds <= 60.0, result.wall_seconds, 60.0,
                        {}};
    result.checks.push_back(runtime);
  }
  return result;
}

const std::vector<std::string>& recipe_names() {
  static const std::vector<std::string> names{
      "invariants", "thm1a", "thm1b", "thm1c-demo",
      "thm2-averaging", "lemmaD", "lemma5", "contour"};
  return names;
}

std::vector<int> recipe_criteria(const std::string& recipe) {
  if (recipe == "invariants") return {1, 2};
  if (recipe == "lemmaD") return {3};
  if (recipe == "thm1a") return {4};
  if (recipe == "thm1b") return {5};
  if (recipe == "thm2-averaging") return {6};
  if (recipe == "thm1c-demo") return {7};
  if (recipe == "lemma5") return {8, 9};
  if (recipe == "contour") return {10};
  fail(ErrorCode::invalid_argument, "unknown recipe: " + recipe);
}

RunReport run_recipe(const std::string& recipe, std::uint64_t seed, int budget) {
  auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.recipe = recipe;
  report.seed = seed;
  report.budget = budget;
  for (int index : recipe_criteria(recipe))
    report.criteria.push_back(run_criterion(index, seed, budget));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

Json run_report_to_json(const RunReport& report) {
  Json criteria = Json::array();
  for (const CriterionResult& criterion : report.criteria) {
    Json checks = Json::array();
    for (const CheckResult& check : criterion.checks) {
      Json c{{"name", check.name},
             {"anchor", check.anchor},
             {"pass", check.pass},
             {"measured", check.measured},
             {"tolerance", check.tolerance}};
      if (!check.detail.empty()) c["detail"] = check.detail;
      checks.push_back(c);
    }
    criteria.push_back(Json{{"index", criterion.index},
                            {"title", criterion.title},
                            {"pass", criterion.pass()},
                            {"wall_seconds", criterion.wall_seconds},
                            {"checks", checks}});
  }
  return Json{{"recipe", report.recipe},
              {"seed", report.seed},
              {"budget", report.budget},
              {"pass", report.all_pass()},
              {"wall_seconds", report.wall_seconds},
              {"criteria", criteria}};
}

}  // namespace npick
