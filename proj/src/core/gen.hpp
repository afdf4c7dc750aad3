#pragma once

#include <cstdint>

#include "blaschke.hpp"
#include "pick.hpp"
#include "rng.hpp"

namespace npick {

// Random nodes in |z| <= node_radius with pairwise pseudohyperbolic
// separation of at least min_separation (rejection sampling).
std::vector<Complex> random_nodes(Rng& rng, int count, double node_radius = 0.85,
                                  double min_separation = 0.3);

// Targets w_n = scale * g(z_n) with g a random product of automorphism
// factors, so the problem has an explicit solution of norm scale.
PickProblem scaled_problem(Rng& rng, int node_count, double scale,
                           double node_radius = 0.85, int factor_count = 2);

PickProblem scaled_problem_on_nodes(Rng& rng, std::vector<Complex> nodes,
                                    double scale, int factor_count = 2);

ZeroSequence random_zeros(Rng& rng, int count, double max_radius = 0.9);

}  // namespace npick
