#include "contour.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "errors.hpp"
#include "parallel.hpp"

namespace npick {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Edge keys: horizontal edge from corner (i,j) to (i+1,j) and vertical edge
// from (i,j) to (i,j+1), on an (res+1)^2 corner grid.
std::uint64_t edge_key(int i, int j, bool vertical, int res) {
  return (static_cast<std::uint64_t>(j) * (res + 1) + i) * 2 + (vertical ? 1 : 0);
}

}  // namespace

bool ContourEstimate::cell_inside(Complex z) const {
  double step = 2.0 / resolution;
  int i = static_cast<int>(std::floor((z.real() + 1.0) / step));
  int j = static_cast<int>(std::floor((z.imag() + 1.0) / step));
  if (i < 0 || j < 0 || i >= resolution || j >= resolution) return false;
  return cell_mask[static_cast<std::size_t>(j) * resolution + i] != 0;
}

bool ContourEstimate::enclosed(Complex z) const {
  // Even-odd rule against every polyline segment.
  bool inside = false;
  double x = z.real(), y = z.imag();
  for (const auto& line : polylines) {
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      double x1 = line[k].real(), y1 = line[k].imag();
      double x2 = line[k + 1].real(), y2 = line[k + 1].imag();
      if ((y1 > y) == (y2 > y)) continue;
      double t = (y - y1) / (y2 - y1);
      if (x < x1 + t * (x2 - x1)) inside = !inside;
    }
  }
  return inside;
}

ContourEstimate level_contour(const BlaschkeProduct& b, double eps, int resolution) {
  if (!(eps > 0.0 && eps < 1.0))
    fail(ErrorCode::invalid_argument, "level must lie in (0, 1)");
  if (!is_power_of_two(resolution) || resolution > (1 << 12))
    fail(ErrorCode::invalid_argument,
         "grid resolution must be a power of two <= 4096");

  const int res = resolution;
  const int corners = res + 1;
  const double step = 2.0 / res;
  std::vector<double> field(static_cast<std::size_t>(corners) * corners);

  parallel_for(static_cast<std::size_t>(corners) * corners, [&](std::size_t idx) {
    int i = static_cast<int>(idx % corners);
    int j = static_cast<int>(idx / corners);
    Complex z{-1.0 + step * i, -1.0 + step * j};
    double v = std::abs(z) <= 1.0 ? std::abs(b.value(z)) : 1.0;
    field[idx] = v - eps;
  });
  auto value_at = [&](int i, int j) {
    return field[static_cast<std::size_t>(j) * corners + i];
  };

  ContourEstimate out;
  out.eps = eps;
  out.resolution = res;
  out.cell_mask.assign(static_cast<std::size_t>(res) * res, 0);

  // Interpolated crossing point for each crossing edge, plus adjacency.
  std::unordered_map<std::uint64_t, Complex> points;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> adjacency;
  auto crossing_point = [&](int i, int j, bool vertical) {
    double va = value_at(i, j);
    double vb = vertical ? value_at(i, j + 1) : value_at(i + 1, j);
    double t = va / (va - vb);
    double x = -1.0 + step * i + (vertical ? 0.0 : step * t);
    double y = -1.0 + step * j + (vertical ? step * t : 0.0);
    return Complex{x, y};
  };
  auto add_segment = [&](std::uint64_t e1, std::uint64_t e2) {
    adjacency[e1].push_back(e2);
    adjacency[e2].push_back(e1);
  };

  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      double v00 = value_at(i, j), v10 = value_at(i + 1, j);
      double v01 = value_at(i, j + 1), v11 = value_at(i + 1, j + 1);
      bool b00 = v00 < 0, b10 = v10 < 0, b01 = v01 < 0, b11 = v11 < 0;
      if (b00 && b10 && b01 && b11)
        out.cell_mask[static_cast<std::size_t>(j) * res + i] = 1;
      int crossings = (b00 != b10) + (b10 != b11) + (b11 != b01) + (b01 != b00);
      if (crossings == 0) continue;

      std::uint64_t bottom = edge_key(i, j, false, res);
      std::uint64_t top = edge_key(i, j + 1, false, res);
      std::uint64_t left = edge_key(i, j, true, res);
      std::uint64_t right = edge_key(i + 1, j, true, res);
      if (b00 != b10) points.emplace(bottom, crossing_point(i, j, false));
      if (b01 != b11) points.emplace(top, crossing_point(i, j + 1, false));
      if (b00 != b01) points.emplace(left, crossing_point(i, j, true));
      if (b10 != b11) points.emplace(right, crossing_point(i + 1, j, true));

      if (crossings == 2) {
        std::vector<std::uint64_t> hit;
        if (b00 != b10) hit.push_back(bottom);
        if (b10 != b11) hit.push_back(right);
        if (b11 != b01) hit.push_back(top);
        if (b01 != b00) hit.push_back(left);
        add_segment(hit[0], hit[1]);
      } else {
        // Saddle: resolved by the average of the four corners.
        bool center_inside = 0.25 * (v00 + v10 + v01 + v11) < 0;
        bool diag00 = b00 && b11;  // inside corners on the main diagonal
        if (diag00 == center_inside) {
          add_segment(bottom, right);
          add_segment(top, left);
        } else {
          add_segment(bottom, left);
          add_segment(top, right);
        }
      }
    }
  }

  // Walk the adjacency into closed polylines.
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> used;
  auto mark = [&](std::uint64_t a, std::uint64_t b) {
    used[{std::min(a, b), std::max(a, b)}] = true;
  };
  auto is_used = [&](std::uint64_t a, std::uint64_t b) {
    auto it = used.find({std::min(a, b), std::max(a, b)});
    return it != used.end() && it->second;
  };
  for (const auto& [start, neighbors] : adjacency) {
    for (std::uint64_t first : neighbors) {
      if (is_used(start, first)) continue;
      std::vector<Complex> line;
      line.push_back(points.at(start));
      std::uint64_t cur = first;
      mark(start, cur);
      line.push_back(points.at(cur));
      while (cur != start) {
        std::uint64_t next = cur;
        bool found = false;
        for (std::uint64_t cand : adjacency.at(cur)) {
          if (!is_used(cur, cand)) {
            next = cand;
            found = true;
            break;
          }
        }
        if (!found)
          fail(ErrorCode::contour_open,
               "level set chain terminated without closing");
        mark(cur, next);
        cur = next;
        line.push_back(points.at(cur));
      }
      out.polylines.push_back(std::move(line));
    }
  }

  for (const auto& line : out.polylines)
    for (std::size_t k = 0; k + 1 < line.size(); ++k)
      out.total_length += std::abs(line[k + 1] - line[k]);

  // Modulus range over corners adjacent to mask cells.
  out.min_modulus_inside = 1.0;
  out.max_modulus_inside = 0.0;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      if (!out.cell_mask[static_cast<std::size_t>(j) * res + i]) continue;
      for (int dj = 0; dj <= 1; ++dj) {
        for (int di = 0; di <= 1; ++di) {
          double v = value_at(i + di, j + dj) + eps;
          out.min_modulus_inside = std::min(out.min_modulus_inside, v);
          out.max_modulus_inside = std::max(out.max_modulus_inside, v);
        }
      }
    }
  }

  // Every zero must be enclosed; the grid is otherwise too coarse to
  // represent the level set of this product.
  for (const Complex& zero : b.zeros()) {
    if (!out.enclosed(zero))
      fail(ErrorCode::grid_too_coarse,
           "a zero of the product is not enclosed by the extracted level set");
  }
  return out;
}

CarlesonNormEstimate carleson_norm(const ContourEstimate& c, int levels) {
  if (levels < 0 || levels > 12)
    fail(ErrorCode::invalid_argument, "box levels must lie in [0, 12]");
  CarlesonNormEstimate est;
  est.per_level.assign(levels + 1, 0.0);
  est.cumulative.assign(levels + 1, 0.0);

  // Accumulate subdivided segment pieces into the dyadic box bins.
  std::vector<std::vector<double>> bins(levels + 1);
  for (int l = 0; l <= levels; ++l) bins[l].assign(std::size_t{1} << l, 0.0);
  double max_piece = std::ldexp(1.0, -levels) / 4.0;
  for (const auto& line : c.polylines) {
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      Complex a = line[k], b = line[k + 1];
      double len = std::abs(b - a);
      if (len == 0.0) continue;
      int pieces = std::max(1, static_cast<int>(std::ceil(len / max_piece)));
      for (int p = 0; p < pieces; ++p) {
        Complex mid = a + (b - a) * ((p + 0.5) / pieces);
        double piece_len = len / pieces;
        double r = std::abs(mid);
        double theta = std::arg(mid);
        if (theta < 0) theta += two_pi;
        for (int l = 0; l <= levels; ++l) {
          if (r < 1.0 - std::ldexp(1.0, -l)) continue;
          auto idx = static_cast<std::size_t>(theta / two_pi * (1 << l));
          if (idx >= bins[l].size()) idx = bins[l].size() - 1;
          bins[l][idx] += piece_len;
        }
      }
    }
  }
  double running = 0.0;
  for (int l = 0; l <= levels; ++l) {
    double depth = std::ldexp(1.0, -l);
    double sup = 0.0;
    for (double length : bins[l]) sup = std::max(sup, length / depth);
    est.per_level[l] = sup;
    running = std::max(running, sup);
    est.cumulative[l] = running;
  }
  est.value = running;
  return est;
}

}  // namespace npick
