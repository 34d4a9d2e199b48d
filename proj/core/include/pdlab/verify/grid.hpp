#pragma once

// Sampling grids for supremum estimation. Refinement halves every spacing and
// keeps all previous nodes bit-identical, so sampled sups are monotone.

#include <variant>
#include <vector>

#include <json.hpp>

#include "pdlab/types.hpp"

namespace pdlab::verify {

/// Nodes center + r (cos a, sin a), r = r_inner + (r_outer - r_inner) i / radial
/// for i in [0, radial], a = 2 pi j / angular for j in [0, angular).
struct PolarPatch {
  Point center;
  double r_inner = 0.0;
  double r_outer = 1.0;
  int radial = 64;
  int angular = 64;
};

/// Nodes (x0 + (x1 - x0) i / nx, y0 + (y1 - y0) j / ny), i in [0, nx], j in [0, ny].
struct CartesianPatch {
  double x0 = -1.0, x1 = 1.0;
  double y0 = -1.0, y1 = 1.0;
  int nx = 64, ny = 64;
};

using GridPatch = std::variant<PolarPatch, CartesianPatch>;

class Grid {
 public:
  Grid() = default;
  explicit Grid(std::vector<GridPatch> patches);

  Grid& add(GridPatch patch);
  const std::vector<GridPatch>& patches() const { return patches_; }

  Grid refined() const;
  std::vector<Point> points() const;
  std::size_t size() const;
  nlohmann::json describe() const;

 private:
  std::vector<GridPatch> patches_;
};

struct Resolution {
  int radial = 64;
  int angular = 64;
};

/// Polar grid covering the closed disk of the given radius.
Grid disk_grid(Point center, double radius, Resolution res = {});
/// Polar grid of the annulus r_inner <= |x| <= r_outer.
Grid shell_grid(double r_inner, double r_outer, Resolution res = {64, 256});
/// Cartesian background on [-1.1, 1.1]^2.
Grid background_grid(int resolution = 512);

}  // namespace pdlab::verify
