#include "gen.hpp"

#include <cmath>

#include "errors.hpp"

namespace npick {

std::vector<Complex> random_nodes(Rng& rng, int count, double node_radius,
                                  double min_separation) {
  std::vector<Complex> nodes;
  nodes.reserve(count);
  int attempts = 0;
  while (static_cast<int>(nodes.size()) < count) {
    if (++attempts > 10000 * count)
      fail(ErrorCode::bad_params, "cannot place that many separated nodes");
    Complex z = rng.in_disc(node_radius);
    bool ok = true;
    for (const Complex& other : nodes)
      if (pseudohyperbolic(z, other) < min_separation) { ok = false; break; }
    if (ok) nodes.push_back(z);
  }
  return nodes;
}

PickProblem scaled_problem_on_nodes(Rng& rng, std::vector<Complex> nodes,
                                    double scale, int factor_count) {
  if (!(scale > 0.0 && scale < 1.0))
    fail(ErrorCode::bad_params, "scale must lie in (0, 1)");
  std::vector<Complex> factors(factor_count);
  for (Complex& a : factors) a = rng.in_disc(0.7);
  auto g = [&factors](Complex z) {
    Complex v{1.0};
    for (const Complex& a : factors) v *= blaschke_factor(a, z);
    return v;
  };
  std::vector<Complex> targets(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) targets[i] = scale * g(nodes[i]);
  return PickProblem::create(std::move(nodes), std::move(targets));
}

PickProblem scaled_problem(Rng& rng, int node_count, double scale,
                           double node_radius, int factor_count) {
  return scaled_problem_on_nodes(rng, random_nodes(rng, node_count, node_radius),
                                 scale, factor_count);
}

ZeroSequence random_zeros(Rng& rng, int count, double max_radius) {
  std::vector<Complex> zeros(count);
  for (Complex& z : zeros) z = rng.in_disc(max_radius);
  return ZeroSequence(std::move(zeros));
}

}  // namespace npick
