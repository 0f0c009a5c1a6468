#include "rydnet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rydnet::router {

std::vector<Offset> neighbor_set(double r_max_um, double spacing_um) {
  if (!(spacing_um > 0.0)) throw std::invalid_argument("lattice spacing must be positive");
  if (!(r_max_um > 0.0)) throw std::invalid_argument("r_max must be positive");
  // Tolerate rounding so that e.g. r_max = sqrt(5)*spacing includes the
  // (2, 1) shell computed in floating point.
  const double cap_sq = (r_max_um / spacing_um) * (r_max_um / spacing_um) * (1.0 + 1e-9);
  const int kmax = static_cast<int>(std::floor(std::sqrt(cap_sq)));
  std::vector<Offset> out;
  for (int dy = -kmax; dy <= kmax; ++dy) {
    for (int dx = -kmax; dx <= kmax; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const double k_sq = static_cast<double>(dx) * dx + static_cast<double>(dy) * dy;
      if (k_sq > cap_sq) continue;
      out.push_back(Offset{dx, dy, spacing_um * std::sqrt(k_sq)});
    }
  }
  if (out.empty())
    throw std::invalid_argument("empty neighbor set: r_max " + std::to_string(r_max_um) +
                                " um is below the lattice spacing " + std::to_string(spacing_um) +
                                " um");
  std::sort(out.begin(), out.end(), [](const Offset& a, const Offset& b) {
    if (a.r_um != b.r_um) return a.r_um < b.r_um;
    if (a.dx != b.dx) return a.dx < b.dx;
    return a.dy < b.dy;
  });
  return out;
}

std::vector<double> radius_set(const std::vector<Offset>& offsets) {
  std::vector<double> radii;
  for (const Offset& o : offsets) {
    if (radii.empty() || std::abs(radii.back() - o.r_um) > 1e-12 * o.r_um)
      radii.push_back(o.r_um);
  }
  return radii;
}

}  // namespace rydnet::router
