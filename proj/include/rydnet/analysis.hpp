#pragma once

#include <vector>

#include "rydnet/context.hpp"

namespace rydnet::analysis {

// Overall loss of a distance-D gate as a function of the interaction radius
// r (in units of the lattice spacing): covering distance D with hops of
// length r costs 3D/r - 2 gates, each surviving with probability
// (1 - p_scat) * (1 - p_cz(r)).
struct SweetSpotCurve {
  double hops = 0.0;          // D
  double tau_scat_us = 0.0;
  double p_scat = 0.0;
  std::vector<double> r_grid;      // units of the spacing
  std::vector<double> p_overall;
};

// p_cz(r) uses the graded level for radius r * spacing. Grid values must lie
// in [1, 3D/2] (the gate-count exponent stays nonnegative).
SweetSpotCurve overall_loss_curve(const phys::PhysicsContext& ctx, double spacing_um, double hops,
                                  const std::vector<double>& r_grid);

// Grid argmin with one parabolic refinement through the bracketing points;
// exact ties resolve to the smallest radius. Returns (r*, loss*).
struct Optimum {
  double r_star = 0.0;
  double loss_star = 0.0;
  int grid_index = 0;
};
Optimum find_optimum_radius(const SweetSpotCurve& curve);

// Largest radius (units of spacing) any level of the model supports.
double max_supported_radius(const phys::PhysicsContext& ctx, double spacing_um);

// Log-spaced grid of `points` radii on [lo, hi].
std::vector<double> log_grid(double lo, double hi, int points);

struct ScatteringSweep {
  std::vector<SweetSpotCurve> curves;      // one per tau_scat
  std::vector<Optimum> optima;
};

// Re-evaluate the curve for each scattering time (everything else fixed).
ScatteringSweep sweep_scattering_times(const phys::PhysicsContext& ctx, double spacing_um,
                                       double hops, const std::vector<double>& r_grid,
                                       const std::vector<double>& tau_scat_list_us);

// Least-squares scaling exponents over integer levels [n_lo, n_hi]:
//   loss_slope:  d log(1 - p11) / d log n   (field-noise gate loss)
//   radius_slope: d log r_max / d log n
struct ScalingFit {
  double loss_slope = 0.0;
  double radius_slope = 0.0;
};
ScalingFit fit_scaling_exponents(const phys::PhysicsContext& ctx, int n_lo, int n_hi);

// Ordinary least squares slope of y against x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rydnet::analysis
