#pragma once

#include <vector>

#include "blaschke.hpp"
#include "quadrature.hpp"
#include "trend.hpp"
#include "weights.hpp"

namespace npick {

// Partial sums of h(|z_n|^2), optionally times |log(1 - |z_n|^2)|, along a
// doubling truncation schedule, with a trend verdict. Lists too short for a
// trend call (fewer than 32 zeros) are reported finite: a complete short sum.
ClassReport weighted_zero_sum(const ZeroSequence& seq, const WeightFunction& h,
                              bool log_weight,
                              const TrendOptions& options = {});

struct AnnulusCounts {
  int bound = 0;                // max zeros in a single dyadic annulus
  std::vector<int> per_annulus; // counts by annulus index
};
AnnulusCounts exponential_bound(const ZeroSequence& seq);

struct RadiiSchedule {
  int first = 1;
  int last = 14;  // r_k = 1 - 2^{-k}, k = first..last
};

// Circle averages of |f'(r_k e^{i t})|^alpha along the radii schedule, each
// refined until two angular resolutions agree to rel_tol.
ClassReport hardy_derivative_norm(const InnerFunction& f, double alpha,
                                  RadiiSchedule schedule = {},
                                  double rel_tol = 1e-4,
                                  int max_angular = 1 << 20);

struct ConeSpec {
  double vertex_angle = pi / 4;  // total opening of the nontangential cone
  int radial_samples = 32;
  int angular_samples = 9;
  double max_depth = 0.5;
  double min_depth = 0x1.0p-16;
};

struct LambdaSchedule {
  int min_exp = 0;
  int max_exp = 20;  // lambda = 2^m
};

// Discrete nontangential maximal function of |f'| at e^{i theta}.
double nontangential_max(const InnerFunction& f, double theta, const ConeSpec& cone);

// W(lambda) = lambda * |{theta : M f'(e^{i theta}) >= lambda}| along the
// lambda schedule; finite when sup_lambda W stays put under refinement.
ClassReport weak_h1_diagnostic(const InnerFunction& f,
                               LambdaSchedule lambdas = {},
                               ConeSpec cone = {},
                               int boundary_samples = 1 << 12);

// integral over the disc of log|f|^{-1} |h''(|z|^2)| dA, with the optional
// |log(1-|z|^2)| factor.
ClassReport carleson_integral(const InnerFunction& f, const WeightFunction& h,
                              bool log_weight, double tol,
                              QuadratureSpec spec = {});

// Same with the named weight (1-|z|)^{-1-alpha} (times |log(1-|z|)| when
// log_weight is set).
ClassReport carleson_integral_alpha(const InnerFunction& f, double alpha,
                                    bool log_weight, double tol,
                                    QuadratureSpec spec = {});

// Distributional identity linking the weighted zero sum of a finite product
// to two weighted area integrals of log|B|:
//   2 pi sum_n F(z_n) = term_log + term_rest,  F(z) = (1-|z|^2)^{1-a} log(1-|z|^2),
// where the terms split the Laplacian of F into its log part and the rest.
struct GreenCheck {
  double fd_max_rel_error = 0.0;   // analytic Laplacian vs central differences
  double sum_side = 0.0;           // 2 pi sum_n F(z_n)
  double term_log = 0.0;
  double term_rest = 0.0;
  double identity_rel_residual = 0.0;
  double quadrature_error = 0.0;
};

GreenCheck green_identity_check(const BlaschkeProduct& b, double alpha,
                                double tol, double fd_step = 0x1.0p-10);

// Laplacian of (1-|z|^2)^{1-a} log(1-|z|^2), split as
//   (1-u)^{-1-a} (c_log(u) log(1-u) + c_rest(u)),  u = |z|^2.
double green_c_log(double u, double alpha);
double green_c_rest(double u, double alpha);
double green_laplacian(double u, double alpha);

}  // namespace npick
