#include "pick.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace npick {

namespace {
constexpr double kMinSeparation = 1e-8;
}

PickProblem PickProblem::create(std::vector<Complex> nodes,
                                std::vector<Complex> targets) {
  if (nodes.empty() || nodes.size() != targets.size())
    fail(ErrorCode::bad_input, "need equally many nodes and targets, at least one");
  for (const Complex& z : nodes)
    if (std::abs(z) >= 1.0)
      fail(ErrorCode::bad_input, "interpolation nodes must lie inside the disc");
  for (const Complex& w : targets)
    if (std::abs(w) > 1.0)
      fail(ErrorCode::bad_input, "targets must satisfy |w| <= 1");
  double min_sep = 2.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      min_sep = std::min(min_sep, pseudohyperbolic(nodes[i], nodes[j]));
  if (nodes.size() == 1) min_sep = 2.0;
  if (min_sep < kMinSeparation)
    fail(ErrorCode::ill_conditioned,
         "nodes closer than 1e-8 in pseudohyperbolic distance");
  return PickProblem{std::move(nodes), std::move(targets), min_sep};
}

HermitianMatrix pick_matrix(const PickProblem& p, double scale) {
  if (scale <= 0.0) fail(ErrorCode::invalid_argument, "scale must be positive");
  const auto n = static_cast<Eigen::Index>(p.size());
  HermitianMatrix m(n, n);
  double t2 = scale * scale;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      Complex num = t2 - p.targets[i] * std::conj(p.targets[j]);
      Complex den = t2 * (1.0 - p.nodes[i] * std::conj(p.nodes[j]));
      m(i, j) = num / den;
      m(j, i) = std::conj(m(i, j));
    }
    m(i, i) = Complex{m(i, i).real(), 0.0};
  }
  return m;
}

const char* to_string(Solvability s) {
  switch (s) {
    case Solvability::yes: return "yes";
    case Solvability::no: return "no";
    case Solvability::marginal: return "marginal";
  }
  return "no";
}

PivotResult hermitian_pivots(const HermitianMatrix& m, double tol) {
  HermitianMatrix a = m;
  const Eigen::Index n = a.rows();
  PivotResult result;
  result.tol_abs = tol * std::max(std::abs(a.trace().real()) / n, 1e-300);
  std::vector<Eigen::Index> perm(n);
  for (Eigen::Index i = 0; i < n; ++i) perm[i] = i;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (a(i, i).real() > a(p, p).real()) p = i;
    if (p != k) {
      a.row(k).swap(a.row(p));
      a.col(k).swap(a.col(p));
    }
    double pivot = a(k, k).real();
    min_pivot = std::min(min_pivot, pivot);
    if (pivot <= result.tol_abs) {
      // Remaining block is numerically indefinite or null; its diagonal
      // carries the remaining pivot information.
      for (Eigen::Index i = k + 1; i < n; ++i)
        min_pivot = std::min(min_pivot, a(i, i).real());
      break;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) {
        a(i, j) -= a(i, k) * std::conj(a(j, k)) / pivot;
        a(j, i) = std::conj(a(i, j));
      }
    }
  }
  result.min_pivot = (n == 0) ? 0.0 : min_pivot;
  return result;
}

double min_eigenvalue(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<HermitianMatrix> solver(m,
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Solvability is_solvable(const PickProblem& p, double tol, double* min_eig_out,
                        double* min_pivot_out) {
  HermitianMatrix m = pick_matrix(p, 1.0);
  PivotResult pivots = hermitian_pivots(m, tol);
  double eig = min_eigenvalue(m);
  if (min_eig_out) *min_eig_out = eig;
  if (min_pivot_out) *min_pivot_out = pivots.min_pivot;
  Solvability verdict;
  if (pivots.min_pivot <= -pivots.tol_abs)
    verdict = Solvability::no;
  else if (pivots.min_pivot < pivots.tol_abs)
    verdict = Solvability::marginal;
  else
    verdict = Solvability::yes;
  // Cross-check the factorization against the eigenvalue estimate; a
  // disagreement is treated as marginal rather than trusted either way.
  if (verdict == Solvability::yes && eig <= -pivots.tol_abs)
    verdict = Solvability::marginal;
  if (verdict == Solvability::no && eig >= pivots.tol_abs)
    verdict = Solvability::marginal;
  return verdict;
}

namespace {

bool psd_at_scale(const PickProblem& p, double t, double tol,
                  std::vector<BisectionPoint>* trace) {
  PivotResult r = hermitian_pivots(pick_matrix(p, t), tol);
  bool psd = r.nonnegative();
  if (trace) trace->push_back({t, psd});
  return psd;
}

}  // namespace

double optimal_norm(const PickProblem& p, double tol,
                    std::vector<BisectionPoint>* trace) {
  if (tol <= 0.0) fail(ErrorCode::invalid_argument, "tolerance must be positive");
  double wmax = 0.0;
  for (const Complex& w : p.targets) wmax = std::max(wmax, std::abs(w));
  if (wmax == 0.0) return 0.0;

  double lo = wmax * (1.0 - 1e-12);
  if (psd_at_scale(p, lo, tol, trace)) return wmax;
  double hi = std::max(1.0, 2.0 * wmax);
  int expansions = 0;
  while (!psd_at_scale(p, hi, tol, trace)) {
    hi *= 2.0;
    if (++expansions > 60)
      fail(ErrorCode::divergence, "failed to bracket the optimal norm");
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (psd_at_scale(p, mid, tol, trace))
      hi = mid;
    else
      lo = mid;
  }
  if (trace) {
    // PSD must be monotone in the scale along the recorded trace.
    std::vector<BisectionPoint> sorted = *trace;
    std::sort(sorted.begin(), sorted.end(),
              [](const BisectionPoint& a, const BisectionPoint& b) {
                return a.t < b.t;
              });
    bool seen_psd = false;
    for (const BisectionPoint& pt : sorted) {
      if (seen_psd && !pt.psd)
        fail(ErrorCode::divergence, "PSD monotonicity violated during bisection");
      seen_psd = seen_psd || pt.psd;
    }
  }
  return 0.5 * (lo + hi);
}

FeasibilityReport scaled_report(const PickProblem& p, double tol) {
  FeasibilityReport report;
  double min_eig = 0.0;
  report.solvable = is_solvable(p, tol, &min_eig);
  report.min_eig = min_eig;
  report.optimal_norm = optimal_norm(p, tol);
  report.scaled = report.optimal_norm < 1.0 - tol;
  report.margin = 1.0 - report.optimal_norm;
  return report;
}

}  // namespace npick
