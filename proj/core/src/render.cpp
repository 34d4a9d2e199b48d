#include "pdlab/render.hpp"

#include <cstdio>
#include <sstream>

#include "pdlab/verify/obstruction.hpp"

namespace pdlab {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

class Svg {
 public:
  explicit Svg(double extent = 1.1) : extent_(extent) {
    const std::string e = num(extent), w = num(2 * extent);
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"-" << e << " -" << e
         << " " << w << " " << w << "\">\n"
         << "<g transform=\"scale(1,-1)\">\n";
    const double s = extent * 0.002;
    out_ << "<g class=\"axes\" stroke=\"#888\" stroke-width=\"" << num(s) << "\">\n"
         << "<line x1=\"-" << e << "\" y1=\"0\" x2=\"" << e << "\" y2=\"0\"/>\n"
         << "<line x1=\"0\" y1=\"-" << e << "\" x2=\"0\" y2=\"" << e << "\"/>\n"
         << "</g>\n";
  }

  std::ostringstream& body() { return out_; }
  double stroke() const { return extent_ * 0.001; }

  std::string finish() {
    out_ << "</g>\n</svg>\n";
    return out_.str();
  }

 private:
  double extent_;
  std::ostringstream out_;
};

int clamp_range(int& n_lo, int& n_hi) {
  n_lo = std::max(n_lo, kMinLevel);
  if (n_hi > kMaxRenderLevel) throw UsageError("render range limited to n <= " + std::to_string(kMaxRenderLevel));
  return n_hi - n_lo + 1;
}

}  // namespace

std::string render_arrangement(int n_lo, int n_hi) {
  Svg svg;
  if (clamp_range(n_lo, n_hi) > 0) {
    svg.body() << "<g class=\"disks\" fill=\"#2a6fb0\" stroke=\"none\">\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      const std::string r = num(disk_radius_double(n));
      const std::int64_t count = std::int64_t{1} << n;
      for (std::int64_t s = 1; s <= count; ++s) {
        const Point c = disk_center(n, s);
        svg.body() << "<circle class=\"disk\" data-n=\"" << n << "\" data-s=\"" << s << "\" cx=\"" << num(c.x)
                   << "\" cy=\"" << num(c.y) << "\" r=\"" << r << "\"/>\n";
      }
    }
    svg.body() << "</g>\n";
  }
  return svg.finish();
}

std::string render_annuli(int n_lo, int n_hi) {
  Svg svg;
  if (clamp_range(n_lo, n_hi) > 0) {
    for (int n = n_lo; n <= n_hi; ++n) {
      for (const auto kind : {AnnulusKind::F, AnnulusKind::E}) {
        const AnnulusSpec a = annulus(n, kind);
        const double mid = 0.5 * (a.inner.get_d() + a.outer.get_d());
        const double width = a.outer.get_d() - a.inner.get_d();
        const bool e = kind == AnnulusKind::E;
        svg.body() << "<circle class=\"ring " << (e ? "E" : "F") << "\" data-n=\"" << n << "\" data-inner=\""
                   << to_string(a.inner) << "\" data-outer=\"" << to_string(a.outer)
                   << "\" cx=\"0\" cy=\"0\" r=\"" << num(mid) << "\" fill=\"none\" stroke=\""
                   << (e ? "#d9822b" : "#f3d3b0") << "\" stroke-width=\"" << num(width) << "\"/>\n";
      }
    }
  }
  return svg.finish();
}

std::string render_heatmap(const Arrangement& arrangement, int resolution, double extent) {
  if (resolution <= 0 || !(extent > 0)) throw UsageError("heatmap needs a positive resolution and extent");
  Svg svg(extent * 1.05);
  const double cell = 2 * extent / resolution;
  const double peak = 1.0 / 24.0;
  svg.body() << "<g class=\"heatmap\" fill=\"#b0302a\">\n";
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const double x0 = -extent + i * cell, y0 = -extent + j * cell;
      double u = 0.0;
      try {
        u = arrangement.u_eval({x0 + cell / 2, y0 + cell / 2});
      } catch (const IndeterminateError&) {
        u = 0.0;
      }
      if (u <= 0.0) continue;
      svg.body() << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(cell) << "\" height=\""
                 << num(cell) << "\" fill-opacity=\"" << num(std::min(1.0, u / peak)) << "\"/>\n";
    }
  }
  svg.body() << "</g>\n";
  return svg.finish();
}

std::string render_path(const Arrangement& arrangement, int n) {
  check_level(n);
  const double h = adjacent_gap(n).approx / 10.0;
  const auto path = verify::segment_path(disk_center(n, 1), disk_center(n, 2), h);
  const auto cert = verify::path_obstruction_check(arrangement, n, path, h);
  Svg svg;
  const std::string r = num(disk_radius_double(n));
  svg.body() << "<g class=\"disks\" fill=\"#2a6fb0\">\n";
  for (std::int64_t s = 1; s <= 3; ++s) {
    const Point c = disk_center(n, s);
    svg.body() << "<circle class=\"disk\" data-n=\"" << n << "\" data-s=\"" << s << "\" cx=\"" << num(c.x)
               << "\" cy=\"" << num(c.y) << "\" r=\"" << r << "\"/>\n";
  }
  svg.body() << "</g>\n<polyline class=\"path\" fill=\"none\" stroke=\"#222\" stroke-width=\"" << num(svg.stroke())
             << "\" points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) svg.body() << (i ? " " : "") << num(path[i].x) << "," << num(path[i].y);
  svg.body() << "\"/>\n";
  if (cert.witness_index) {
    const Point w = path[*cert.witness_index];
    svg.body() << "<circle class=\"witness\" data-verdict=\"" << verify::to_string(cert.verdict) << "\" cx=\""
               << num(w.x) << "\" cy=\"" << num(w.y) << "\" r=\"" << num(disk_radius_double(n) / 4)
               << "\" fill=\"#e0301e\"/>\n";
  }
  return svg.finish();
}

}  // namespace pdlab
