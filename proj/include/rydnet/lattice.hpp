#pragma once

#include <vector>

namespace rydnet::router {

// Rectangular lattice of atoms with uniform spacing (um).
struct LatticeSpec {
  int width = 10;
  int height = 10;
  double spacing_um = 4.0;

  int sites() const { return width * height; }
  int index(int x, int y) const { return y * width + x; }
  int x_of(int idx) const { return idx % width; }
  int y_of(int idx) const { return idx / width; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

// One allowed interaction offset on the lattice.
struct Offset {
  int dx = 0;
  int dy = 0;
  double r_um = 0.0;
};

// All integer offsets (dx, dy) != (0, 0) with spacing*sqrt(dx^2+dy^2) <= r_max,
// sorted by (r, dx, dy). Throws std::invalid_argument if the set is empty
// (r_max below the lattice spacing).
std::vector<Offset> neighbor_set(double r_max_um, double spacing_um);

// Distinct interaction radii of an offset set, ascending.
std::vector<double> radius_set(const std::vector<Offset>& offsets);

}  // namespace rydnet::router
