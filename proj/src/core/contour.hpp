#pragma once

#include <cstdint>
#include <vector>

#include "blaschke.hpp"

namespace npick {

// Level set {|B| = eps} extracted by marching squares on a uniform grid over
// [-1, 1]^2. Polylines are closed (front() == back()); the cell mask marks
// grid cells whose four corners all satisfy |B| < eps.
struct ContourEstimate {
  double eps = 0.0;
  int resolution = 0;  // cells per axis
  std::vector<std::vector<Complex>> polylines;
  std::vector<std::uint8_t> cell_mask;  // resolution * resolution
  double total_length = 0.0;
  double min_modulus_inside = 1.0;  // over grid corners strictly inside the mask
  double max_modulus_inside = 0.0;  // empirical delta of the separation

  bool cell_inside(Complex z) const;
  bool enclosed(Complex z) const;  // even-odd test against all polylines
};

ContourEstimate level_contour(const BlaschkeProduct& b, double eps, int resolution);

struct CarlesonNormEstimate {
  double value = 0.0;
  std::vector<double> per_level;  // sup ratio over boxes at each level
  std::vector<double> cumulative; // sup over all boxes at levels <= index
};

// sup over dyadic boxes at levels 0..levels of
// (polyline length inside the box) / (box depth 2^{-level}).
CarlesonNormEstimate carleson_norm(const ContourEstimate& c, int levels);

}  // namespace npick
