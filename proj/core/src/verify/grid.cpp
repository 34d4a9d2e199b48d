#include "pdlab/verify/grid.hpp"

#include <cmath>

namespace pdlab::verify {

Grid::Grid(std::vector<GridPatch> patches) : patches_(std::move(patches)) {}

Grid& Grid::add(GridPatch patch) {
  patches_.push_back(patch);
  return *this;
}

Grid Grid::refined() const {
  Grid g;
  for (const auto& p : patches_) {
    std::visit(
        [&](auto patch) {
          using P = decltype(patch);
          if constexpr (std::is_same_v<P, PolarPatch>) {
            patch.radial *= 2;
            patch.angular *= 2;
          } else {
            patch.nx *= 2;
            patch.ny *= 2;
          }
          g.add(patch);
        },
        p);
  }
  return g;
}

namespace {

// i / n is correctly rounded, so node i of n equals node 2i of 2n.
double node(double lo, double hi, int i, int n) {
  return lo + (hi - lo) * (static_cast<double>(i) / n);
}

}  // namespace

std::vector<Point> Grid::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (const auto& p : patches_) {
    if (const auto* polar = std::get_if<PolarPatch>(&p)) {
      for (int i = 0; i <= polar->radial; ++i) {
        const double r = node(polar->r_inner, polar->r_outer, i, polar->radial);
        for (int j = 0; j < polar->angular; ++j) {
          const double a = kTwoPi * (static_cast<double>(j) / polar->angular);
          out.push_back({polar->center.x + r * std::cos(a), polar->center.y + r * std::sin(a)});
          if (r == 0.0) break;
        }
      }
    } else {
      const auto& c = std::get<CartesianPatch>(p);
      for (int i = 0; i <= c.nx; ++i)
        for (int j = 0; j <= c.ny; ++j) out.push_back({node(c.x0, c.x1, i, c.nx), node(c.y0, c.y1, j, c.ny)});
    }
  }
  return out;
}

std::size_t Grid::size() const {
  std::size_t total = 0;
  for (const auto& p : patches_) {
    if (const auto* polar = std::get_if<PolarPatch>(&p)) {
      const bool degenerate = polar->r_inner == 0.0;
      total += static_cast<std::size_t>(polar->radial + 1) * polar->angular -
               (degenerate ? polar->angular - 1 : 0);
    } else {
      const auto& c = std::get<CartesianPatch>(p);
      total += static_cast<std::size_t>(c.nx + 1) * (c.ny + 1);
    }
  }
  return total;
}

nlohmann::json Grid::describe() const {
  auto arr = nlohmann::json::array();
  for (const auto& p : patches_) {
    if (const auto* polar = std::get_if<PolarPatch>(&p)) {
      arr.push_back({{"kind", "polar"},
                     {"center", {polar->center.x, polar->center.y}},
                     {"r_inner", polar->r_inner},
                     {"r_outer", polar->r_outer},
                     {"radial", polar->radial},
                     {"angular", polar->angular}});
    } else {
      const auto& c = std::get<CartesianPatch>(p);
      arr.push_back({{"kind", "cartesian"},
                     {"x", {c.x0, c.x1}},
                     {"y", {c.y0, c.y1}},
                     {"nx", c.nx},
                     {"ny", c.ny}});
    }
  }
  return arr;
}

Grid disk_grid(Point center, double radius, Resolution res) {
  return Grid({PolarPatch{center, 0.0, radius, res.radial, res.angular}});
}

Grid shell_grid(double r_inner, double r_outer, Resolution res) {
  return Grid({PolarPatch{{0.0, 0.0}, r_inner, r_outer, res.radial, res.angular}});
}

Grid background_grid(int resolution) {
  return Grid({CartesianPatch{-1.1, 1.1, -1.1, 1.1, resolution, resolution}});
}

}  // namespace pdlab::verify
