#include "schur.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace npick {

namespace {
constexpr double kContractivityMargin = 1e-12;
}

Parametrization Parametrization::build(const PickProblem& problem, double tol) {
  PivotResult pivots = hermitian_pivots(pick_matrix(problem, 1.0), tol);
  if (!pivots.strict() || min_eigenvalue(pick_matrix(problem, 1.0)) <= 0.0)
    fail(ErrorCode::not_strictly_solvable,
         "matrix is not strictly positive definite; the solution set is not a ball");

  const std::size_t n = problem.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&problem](std::size_t i, std::size_t j) {
    double ri = std::abs(problem.nodes[i]), rj = std::abs(problem.nodes[j]);
    if (ri != rj) return ri < rj;
    double ai = std::arg(problem.nodes[i]), aj = std::arg(problem.nodes[j]);
    if (ai < 0) ai += two_pi;
    if (aj < 0) aj += two_pi;
    return ai < aj;
  });

  Parametrization param;
  param.problem_ = problem;

  std::vector<Complex> nodes(n), targets(n);
  for (std::size_t k = 0; k < n; ++k) {
    nodes[k] = problem.nodes[order[k]];
    targets[k] = problem.targets[order[k]];
  }

  param.steps_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex tk = targets[k];
    if (std::abs(tk) >= 1.0 - kContractivityMargin)
      fail(ErrorCode::step_blowup,
           "mapped target reached the unit circle; problem is marginal or ill conditioned");
    param.steps_.push_back({nodes[k], tk});
    for (std::size_t m = k + 1; m < n; ++m) {
      Complex shifted = (targets[m] - tk) / (1.0 - std::conj(tk) * targets[m]);
      targets[m] = shifted / blaschke_factor(nodes[k], nodes[m]);
    }
  }

  param.node_product_ = BlaschkeProduct(ZeroSequence(nodes));

  // Normalization: right-multiply by G = [[conj(l), l b], [conj(l) conj(b), l]]
  // so that S(0) = 0, P S - Q R = Pi and R(0) > 0.
  Mat2 m0 = param.chain_at(Complex{0.0});
  Complex beta_bar = -m0.c / m0.d;
  Complex beta = std::conj(beta_bar);
  double contraction = 1.0;
  for (const SchurStep& s : param.steps_) contraction *= 1.0 - std::norm(s.parameter);
  double dd = contraction * (1.0 - std::norm(beta));
  if (!(dd > 0.0))
    fail(ErrorCode::internal, "degenerate normalization determinant");
  Complex u = m0.c * beta + m0.d;
  Complex lambda = std::conj(u) / std::abs(u) / std::sqrt(dd);
  param.gauge_ = {std::conj(lambda), lambda * beta,
                  std::conj(lambda) * beta_bar, lambda};
  param.norm_ = {beta, lambda};
  return param;
}

Mat2 Parametrization::chain_at(Complex z) const {
  Mat2 m;
  for (const SchurStep& s : steps_) {
    Complex b = blaschke_factor(s.node, z);
    Mat2 step{b, s.parameter, std::conj(s.parameter) * b, Complex{1.0}};
    m = m.mul(step);
  }
  return m;
}

void Parametrization::chain_jet_at(Complex z, Mat2* m, Mat2* dm) const {
  Mat2 value;
  Mat2 deriv{Complex{0.0}, Complex{0.0}, Complex{0.0}, Complex{0.0}};
  for (const SchurStep& s : steps_) {
    Complex b = blaschke_factor(s.node, z);
    Complex db = blaschke_factor_derivative(s.node, z);
    Mat2 step{b, s.parameter, std::conj(s.parameter) * b, Complex{1.0}};
    Mat2 dstep{db, Complex{0.0}, std::conj(s.parameter) * db, Complex{0.0}};
    deriv = deriv.mul(step);
    Mat2 vd = value.mul(dstep);
    deriv = {deriv.a + vd.a, deriv.b + vd.b, deriv.c + vd.c, deriv.d + vd.d};
    value = value.mul(step);
  }
  *m = value;
  *dm = deriv;
}

NevanlinnaCoefficients Parametrization::coefficients_at(Complex z) const {
  Mat2 m = chain_at(z).mul(gauge_);
  return {m.b, -m.a, m.d, -m.c};
}

NevanlinnaJet Parametrization::jet_at(Complex z) const {
  Mat2 m, dm;
  chain_jet_at(z, &m, &dm);
  Mat2 mg = m.mul(gauge_);
  Mat2 dg = dm.mul(gauge_);
  return {mg.b, -mg.a, mg.d, -mg.c, dg.b, -dg.a, dg.d, -dg.c};
}

Complex Parametrization::solve_with(const std::function<Complex(Complex)>& phi,
                                    Complex z) const {
  return solve_with_constant(phi(z), z);
}

Complex Parametrization::solve_with_constant(Complex w, Complex z) const {
  NevanlinnaCoefficients c = coefficients_at(z);
  Complex denom = c.r - c.s * w;
  if (denom == Complex{0.0})
    fail(ErrorCode::internal, "parametrization denominator vanished");
  return (c.p - c.q * w) / denom;
}

Complex Parametrization::extremal(double gamma, Complex z) const {
  return solve_with_constant(std::polar(1.0, gamma), z);
}

Complex Parametrization::extremal_derivative(double gamma, Complex z) const {
  NevanlinnaJet j = jet_at(z);
  Complex e = std::polar(1.0, gamma);
  Complex denom = j.r - j.s * e;
  return ((j.dp - j.dq * e) * denom - (j.p - j.q * e) * (j.dr - j.ds * e)) /
         (denom * denom);
}

namespace {

class ExtremalSolution final : public InnerFunction {
 public:
  ExtremalSolution(std::shared_ptr<const Parametrization> param, double gamma)
      : param_(std::move(param)), gamma_(gamma) {}

  Complex value(Complex z) const override { return param_->extremal(gamma_, z); }
  Complex derivative(Complex z) const override {
    return param_->extremal_derivative(gamma_, z);
  }

 private:
  std::shared_ptr<const Parametrization> param_;
  double gamma_;
};

}  // namespace

InnerPtr Parametrization::extremal_function(double gamma) const {
  return std::make_shared<ExtremalSolution>(
      std::make_shared<Parametrization>(*this), gamma);
}

Vertevorrat Parametrization::vertevorrat(Complex z) const {
  NevanlinnaCoefficients c = coefficients_at(z);
  double denom = std::norm(c.r) - std::norm(c.s);
  if (!(denom > 0.0))
    fail(ErrorCode::internal, "|R|^2 - |S|^2 must be positive inside the disc");
  Complex center = (c.p * std::conj(c.r) - c.q * std::conj(c.s)) / denom;
  double radius = std::abs(node_product_.value(z)) / denom;
  return {center, radius};
}

Complex Parametrization::coefficient_ratio(CoefficientRatio which, Complex z) const {
  NevanlinnaCoefficients c = coefficients_at(z);
  switch (which) {
    case CoefficientRatio::p_over_r: return c.p / c.r;
    case CoefficientRatio::q_over_r: return c.q / c.r;
    case CoefficientRatio::s_over_r: return c.s / c.r;
    case CoefficientRatio::one_over_r: return 1.0 / c.r;
    case CoefficientRatio::pi_over_r2:
      return node_product_.value(z) / (c.r * c.r);
  }
  fail(ErrorCode::invalid_argument, "unknown coefficient ratio");
}

Complex Parametrization::average_extremal(Complex z, int gamma_count) const {
  if (gamma_count < 8)
    fail(ErrorCode::invalid_argument, "gamma average needs at least 8 points");
  NevanlinnaCoefficients c = coefficients_at(z);
  Complex sum{0.0};
  for (int k = 0; k < gamma_count; ++k) {
    Complex e = std::polar(1.0, two_pi * k / gamma_count);
    sum += (c.p - c.q * e) / (c.r - c.s * e);
  }
  return sum / static_cast<double>(gamma_count);
}

Complex Parametrization::tilde_integrand(Complex z, double delta,
                                         TildeVariant variant, Complex w) const {
  NevanlinnaCoefficients c = coefficients_at(z);
  switch (variant) {
    case TildeVariant::s_over_r:
      return (delta * (c.s / c.r) + (c.q / c.r) * w) /
             (1.0 + delta * (c.p / c.r) * w);
    case TildeVariant::one_over_r:
      return (delta * (1.0 / c.r) + (c.q / c.r) * w) /
             (1.0 - delta * (node_product_.value(z) / c.r) * w);
  }
  fail(ErrorCode::invalid_argument, "unknown tilde variant");
}

Complex Parametrization::average_tilde(Complex z, double delta,
                                       TildeVariant variant, int gamma_count) const {
  if (gamma_count < 8)
    fail(ErrorCode::invalid_argument, "gamma average needs at least 8 points");
  if (!(delta > 0.0 && delta < 1.0))
    fail(ErrorCode::invalid_argument, "delta must lie in (0, 1)");
  NevanlinnaCoefficients c = coefficients_at(z);
  Complex qr = c.q / c.r;
  Complex head, tail;
  if (variant == TildeVariant::s_over_r) {
    head = delta * (c.s / c.r);
    tail = delta * (c.p / c.r);
  } else {
    head = delta * (1.0 / c.r);
    tail = -delta * (node_product_.value(z) / c.r);
  }
  Complex sum{0.0};
  for (int k = 0; k < gamma_count; ++k) {
    Complex w = std::polar(1.0, two_pi * k / gamma_count);
    sum += (head + qr * w) / (1.0 + tail * w);
  }
  return sum / static_cast<double>(gamma_count);
}

}  // namespace npick
