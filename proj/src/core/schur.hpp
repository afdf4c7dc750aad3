#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "blaschke.hpp"
#include "pick.hpp"

namespace npick {

struct Mat2 {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};  // [[a, b], [c, d]]

  Mat2 mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

struct SchurStep {
  Complex node;
  Complex parameter;  // interpolation datum consumed at this step, |.| < 1
};

struct NevanlinnaCoefficients {
  Complex p, q, r, s;
};

struct NevanlinnaJet {
  Complex p, q, r, s;
  Complex dp, dq, dr, ds;
};

struct Vertevorrat {
  Complex center;
  double radius = 0.0;
};

enum class CoefficientRatio { p_over_r, q_over_r, s_over_r, one_over_r, pi_over_r2 };
enum class TildeVariant { s_over_r, one_over_r };

// Schur-step chain for a strictly solvable problem. One step per node maps
// the remaining targets by t -> ((t - t_k)/(1 - conj(t_k) t)) / b_{z_k}(z_n);
// the composed 2x2 chain is normalized so that S(0) = 0, P S - Q R equals the
// node product, and R(0) is real positive. Every solution of the problem is
// (P - Q phi)/(R - S phi) with phi in the closed unit ball.
class Parametrization {
 public:
  static Parametrization build(const PickProblem& problem, double tol = 1e-10);

  NevanlinnaCoefficients coefficients_at(Complex z) const;
  NevanlinnaJet jet_at(Complex z) const;

  Complex solve_with(const std::function<Complex(Complex)>& phi, Complex z) const;
  Complex solve_with_constant(Complex w, Complex z) const;
  Complex extremal(double gamma, Complex z) const;
  Complex extremal_derivative(double gamma, Complex z) const;
  InnerPtr extremal_function(double gamma) const;

  Vertevorrat vertevorrat(Complex z) const;
  Complex coefficient_ratio(CoefficientRatio which, Complex z) const;

  // Trapezoid average of I_gamma(z) over gamma_count equispaced angles;
  // converges spectrally to (P/R)(z).
  Complex average_extremal(Complex z, int gamma_count) const;
  // Averages of the shifted families built from delta in (0,1); recovers
  // delta*(S/R)(z) resp. delta*(1/R)(z).
  Complex average_tilde(Complex z, double delta, TildeVariant variant,
                        int gamma_count) const;
  Complex tilde_integrand(Complex z, double delta, TildeVariant variant,
                          Complex w) const;

  struct Normalization {
    Complex beta;    // ball automorphism parameter fixing S(0) = 0
    Complex lambda;  // rotation/scale fixing det = Pi and R(0) > 0
  };

  const std::vector<SchurStep>& steps() const { return steps_; }
  const BlaschkeProduct& node_product() const { return node_product_; }
  const PickProblem& problem() const { return problem_; }
  const Normalization& normalization() const { return norm_; }

 private:
  Parametrization() = default;

  Mat2 chain_at(Complex z) const;
  void chain_jet_at(Complex z, Mat2* m, Mat2* dm) const;

  PickProblem problem_;              // original node/target order
  std::vector<SchurStep> steps_;     // processing order: ascending |z|, angle
  BlaschkeProduct node_product_;
  Mat2 gauge_;
  Normalization norm_;
};

}  // namespace npick
