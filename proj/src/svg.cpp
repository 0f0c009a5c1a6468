#include "rydnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "rydnet/csv.hpp"

namespace rydnet::cli {

namespace {

std::string num(double v) { return fmt_g(v); }

// Light -> dark red ramp, t in [0,1].
std::string ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = int(std::lround(255.0 + t * (103.0 - 255.0)));
  const int g = int(std::lround(245.0 + t * (0.0 - 245.0)));
  const int b = int(std::lround(240.0 + t * (13.0 - 240.0)));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

// Grayscale ramp for curve families, light gray -> black.
std::string gray(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int v = int(std::lround(190.0 * (1.0 - t)));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", v, v, v);
  return buf;
}

std::string text(double x, double y, const std::string& s, int size = 12,
                 const std::string& anchor = "start") {
  std::ostringstream os;
  os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size
     << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
  return os.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", v);
  return buf;
}

struct LogAxis {
  double lo = 0.0, hi = 0.0;   // log10 bounds
  double px0 = 0.0, px1 = 0.0;  // pixel range
  double map(double v) const {
    const double t = (std::log10(v) - lo) / (hi - lo);
    return px0 + t * (px1 - px0);
  }
};

}  // namespace

std::string heatmap_svg(const std::vector<double>& grid, const router::LatticeSpec& lattice,
                        const std::string& title) {
  const int cell = 40;
  const int pad_left = 46, pad_top = 44, pad_bottom = 64, pad_right = 20;
  const int width = pad_left + lattice.width * cell + pad_right;
  const int height = pad_top + lattice.height * cell + pad_bottom;

  double vmax = 0.0;
  double vmin = std::numeric_limits<double>::infinity();
  for (double v : grid) {
    if (v > 0.0) {
      vmax = std::max(vmax, v);
      vmin = std::min(vmin, v);
    }
  }
  const bool flat = !(vmax > 0.0) || vmin == vmax;
  const double llo = flat ? 0.0 : std::log10(vmin);
  const double lhi = flat ? 1.0 : std::log10(vmax);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  os << text(width / 2.0, 24, title, 14, "middle");

  for (int y = 0; y < lattice.height; ++y) {
    for (int x = 0; x < lattice.width; ++x) {
      const double v = grid[lattice.index(x, y)];
      const double t = (v <= 0.0 || flat) ? 0.0 : (std::log10(v) - llo) / (lhi - llo);
      os << "<rect x=\"" << pad_left + x * cell << "\" y=\"" << pad_top + y * cell << "\" width=\""
         << cell << "\" height=\"" << cell << "\" fill=\"" << ramp(t)
         << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    }
  }
  for (int x = 0; x < lattice.width; ++x)
    os << text(pad_left + (x + 0.5) * cell, pad_top + lattice.height * cell + 14,
               std::to_string(x), 10, "middle");
  for (int y = 0; y < lattice.height; ++y)
    os << text(pad_left - 8, pad_top + (y + 0.6) * cell, std::to_string(y), 10, "end");

  // Log color bar.
  const int bar_y = pad_top + lattice.height * cell + 26;
  const int bar_w = lattice.width * cell;
  const int steps = 48;
  for (int i = 0; i < steps; ++i)
    os << "<rect x=\"" << num(pad_left + bar_w * double(i) / steps) << "\" y=\"" << bar_y
       << "\" width=\"" << num(double(bar_w) / steps + 0.5) << "\" height=\"10\" fill=\""
       << ramp((i + 0.5) / steps) << "\"/>\n";
  os << text(pad_left, bar_y + 24, flat ? "0" : sci(vmin), 10, "start");
  os << text(pad_left + bar_w, bar_y + 24, flat ? "1" : sci(vmax), 10, "end");
  os << "</svg>\n";
  return os.str();
}

std::string sweetspot_svg(const analysis::ScatteringSweep& sweep) {
  const int width = 680, height = 460;
  const double left = 64, right = 640, top = 40, bottom = 400;

  double rlo = std::numeric_limits<double>::infinity(), rhi = 0.0;
  double plo = std::numeric_limits<double>::infinity(), phi = 0.0;
  for (const analysis::SweetSpotCurve& c : sweep.curves) {
    for (double r : c.r_grid) {
      rlo = std::min(rlo, r);
      rhi = std::max(rhi, r);
    }
    for (double p : c.p_overall) {
      if (p > 0.0) {
        plo = std::min(plo, p);
        phi = std::max(phi, p);
      }
    }
  }
  if (sweep.curves.empty() || !(phi > 0.0)) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
  if (plo == phi) plo = phi / 10.0;

  const LogAxis ax{std::log10(rlo), std::log10(rhi), left, right};
  const LogAxis ay{std::log10(plo), std::log10(phi), bottom, top};
  const double floor_p = plo;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  os << text((left + right) / 2, 22, "overall loss vs interaction radius", 14, "middle");
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left << "\" height=\""
     << bottom - top << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Decade ticks.
  for (int e = int(std::ceil(ay.lo)); e <= int(std::floor(ay.hi)); ++e) {
    const double y = ay.map(std::pow(10.0, e));
    os << "<line x1=\"" << left - 4 << "\" y1=\"" << num(y) << "\" x2=\"" << left << "\" y2=\""
       << num(y) << "\" stroke=\"black\"/>\n";
    os << text(left - 8, y + 4, "1e" + std::to_string(e), 10, "end");
  }
  for (double r = std::ceil(rlo); r <= rhi; r += std::max(1.0, std::floor((rhi - rlo) / 8.0))) {
    const double x = ax.map(r);
    os << "<line x1=\"" << num(x) << "\" y1=\"" << bottom << "\" x2=\"" << num(x) << "\" y2=\""
       << bottom + 4 << "\" stroke=\"black\"/>\n";
    os << text(x, bottom + 18, sci(r), 10, "middle");
  }
  os << text((left + right) / 2, bottom + 36, "interaction radius r (lattice units)", 12,
             "middle");
  os << text(18, (top + bottom) / 2, "p_overall", 12, "middle");

  const int nc = int(sweep.curves.size());
  for (int ci = 0; ci < nc; ++ci) {
    const analysis::SweetSpotCurve& c = sweep.curves[ci];
    os << "<polyline fill=\"none\" stroke=\"" << gray(nc > 1 ? double(ci) / (nc - 1) : 1.0)
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < c.r_grid.size(); ++i) {
      const double p = std::max(c.p_overall[i], floor_p);
      os << num(ax.map(c.r_grid[i])) << "," << num(ay.map(p)) << " ";
    }
    os << "\"/>\n";
  }
  for (std::size_t ci = 0; ci < sweep.optima.size(); ++ci) {
    const analysis::Optimum& o = sweep.optima[ci];
    const double x = ax.map(o.r_star);
    const double y = ay.map(std::max(o.loss_star, floor_p));
    os << "<path d=\"M" << num(x - 5) << " " << num(y - 5) << " L" << num(x + 5) << " "
       << num(y + 5) << " M" << num(x - 5) << " " << num(y + 5) << " L" << num(x + 5) << " "
       << num(y - 5) << "\" stroke=\"#1f5fbf\" stroke-width=\"1.5\"/>\n";
  }

  // Inset: optimum radius against the per-gate scattering loss.
  double slo = std::numeric_limits<double>::infinity(), shi = 0.0;
  for (const analysis::SweetSpotCurve& c : sweep.curves) {
    if (c.p_scat > 0.0) {
      slo = std::min(slo, c.p_scat);
      shi = std::max(shi, c.p_scat);
    }
  }
  if (shi > 0.0 && slo < shi) {
    const double il = right - 200, ir = right - 16, it = top + 16, ib = top + 140;
    const LogAxis ix{std::log10(slo), std::log10(shi), il, ir};
    double rmax_star = 1.0;
    for (const analysis::Optimum& o : sweep.optima) rmax_star = std::max(rmax_star, o.r_star);
    os << "<rect x=\"" << il << "\" y=\"" << it << "\" width=\"" << ir - il << "\" height=\""
       << ib - it << "\" fill=\"white\" stroke=\"black\"/>\n";
    os << text((il + ir) / 2, it - 4, "optimum radius vs p_scat", 10, "middle");
    std::ostringstream pts;
    for (std::size_t ci = 0; ci < sweep.curves.size(); ++ci) {
      if (!(sweep.curves[ci].p_scat > 0.0)) continue;
      const double x = ix.map(sweep.curves[ci].p_scat);
      const double y = ib - (sweep.optima[ci].r_star - 1.0) / std::max(rmax_star - 1.0, 1e-12) *
                                (ib - it - 12) -
                       6;
      pts << num(x) << "," << num(y) << " ";
      os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"2.5\" fill=\"#1f5fbf\"/>\n";
    }
    os << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1\" points=\"" << pts.str()
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rydnet::cli
