#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "disc.hpp"

namespace npick {

using HermitianMatrix = Eigen::MatrixXcd;

struct PickProblem {
  std::vector<Complex> nodes;
  std::vector<Complex> targets;
  double min_separation = 0.0;  // min pairwise pseudohyperbolic node distance

  std::size_t size() const { return nodes.size(); }

  // Validates: equal nonempty lengths, |z_n| < 1, |w_n| <= 1, and node
  // separation of at least 1e-8 (IllConditioned otherwise).
  static PickProblem create(std::vector<Complex> nodes,
                            std::vector<Complex> targets);
};

// Entries (t^2 - w_i conj(w_j)) / (t^2 (1 - z_i conj(z_j))); scale t = 1 is
// the classical matrix. Entry (j,i) is stored as the exact conjugate of (i,j).
HermitianMatrix pick_matrix(const PickProblem& p, double scale = 1.0);

enum class Solvability { yes, no, marginal };
const char* to_string(Solvability s);

struct PivotResult {
  double min_pivot = 0.0;
  double tol_abs = 0.0;
  bool nonnegative() const { return min_pivot >= -tol_abs; }
  bool strict() const { return min_pivot >= tol_abs; }
};

// Self-adjoint factorization with complete diagonal pivoting; the pivot
// tolerance is tol * |trace| / n.
PivotResult hermitian_pivots(const HermitianMatrix& m, double tol);

double min_eigenvalue(const HermitianMatrix& m);

struct FeasibilityReport {
  Solvability solvable = Solvability::no;
  double min_eig = 0.0;
  double optimal_norm = 0.0;
  bool scaled = false;
  double margin = 0.0;  // 1 - optimal_norm
};

Solvability is_solvable(const PickProblem& p, double tol,
                        double* min_eig_out = nullptr,
                        double* min_pivot_out = nullptr);

struct BisectionPoint {
  double t = 0.0;
  bool psd = false;
};

// Smallest t such that the matrix at scale t is positive semidefinite,
// located by bisection to absolute accuracy tol.
double optimal_norm(const PickProblem& p, double tol,
                    std::vector<BisectionPoint>* trace = nullptr);

FeasibilityReport scaled_report(const PickProblem& p, double tol);

}  // namespace npick
