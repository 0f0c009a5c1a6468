#include "rydnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rydnet/graph.hpp"

namespace rydnet::analysis {

SweetSpotCurve overall_loss_curve(const phys::PhysicsContext& ctx, double spacing_um, double hops,
                                  const std::vector<double>& r_grid) {
  if (hops < 1.0) throw std::invalid_argument("hop count must be >= 1");
  if (r_grid.empty()) throw std::invalid_argument("empty radius grid");
  SweetSpotCurve curve;
  curve.hops = hops;
  curve.tau_scat_us = ctx.noise().tau_scat_us;
  curve.p_scat = ctx.p_scat();
  curve.r_grid = r_grid;
  curve.p_overall.reserve(r_grid.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    if (i > 0 && r <= prev) throw std::invalid_argument("radius grid must increase strictly");
    prev = r;
    const double gates = 3.0 * hops / r - 2.0;
    if (r < 1.0 || gates < 0.0)
      throw std::domain_error("radius outside [1, 3D/2]: gate-count exponent negative");
    const int n = router::n_graded(ctx, r * spacing_um);
    const double p_gate = ctx.gate_loss(n);  // scattering folded in
    curve.p_overall.push_back(-std::expm1(gates * std::log1p(-p_gate)));
  }
  return curve;
}

Optimum find_optimum_radius(const SweetSpotCurve& curve) {
  if (curve.r_grid.empty()) throw std::invalid_argument("empty curve");
  int best = 0;
  for (int i = 1; i < int(curve.p_overall.size()); ++i)
    if (curve.p_overall[i] < curve.p_overall[best]) best = i;  // ties keep the smaller radius

  Optimum opt;
  opt.grid_index = best;
  opt.r_star = curve.r_grid[best];
  opt.loss_star = curve.p_overall[best];
  if (best > 0 && best + 1 < int(curve.p_overall.size())) {
    // One parabolic refinement through the bracketing grid points.
    const double x0 = curve.r_grid[best - 1], x1 = curve.r_grid[best], x2 = curve.r_grid[best + 1];
    const double y0 = curve.p_overall[best - 1], y1 = curve.p_overall[best],
                 y2 = curve.p_overall[best + 1];
    const double denom = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    if (denom != 0.0) {
      const double num =
          (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
      const double x_ref = x1 - 0.5 * num / denom;
      if (x_ref > x0 && x_ref < x2) opt.r_star = x_ref;
    }
  }
  return opt;
}

double max_supported_radius(const phys::PhysicsContext& ctx, double spacing_um) {
  const phys::AtomicModel& model = ctx.model();
  if (!model.is_table())
    throw std::domain_error("power-law levels are unbounded; no largest radius exists");
  double best = 0.0;
  for (const phys::RydbergLevel& lvl : model.table())
    best = std::max(best, ctx.max_radius(lvl.n));
  return best / spacing_um;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("need 0 < lo < hi");
  if (points < 2) throw std::invalid_argument("need at least two grid points");
  std::vector<double> grid(points);
  const double step = (std::log(hi) - std::log(lo)) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = std::exp(std::log(lo) + step * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

ScatteringSweep sweep_scattering_times(const phys::PhysicsContext& ctx, double spacing_um,
                                       double hops, const std::vector<double>& r_grid,
                                       const std::vector<double>& tau_scat_list_us) {
  ScatteringSweep sweep;
  for (const double tau : tau_scat_list_us) {
    phys::NoiseConfig noise = ctx.noise();
    noise.tau_scat_us = tau;
    const phys::PhysicsContext local(ctx.model(), ctx.drive(), noise);
    sweep.curves.push_back(overall_loss_curve(local, spacing_um, hops, r_grid));
    sweep.optima.push_back(find_optimum_radius(sweep.curves.back()));
  }
  return sweep;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need paired data, n >= 2");
  const double n = double(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = sxx - sx * sx / n;
  if (denom == 0.0) throw std::invalid_argument("degenerate abscissa");
  return (sxy - sx * sy / n) / denom;
}

ScalingFit fit_scaling_exponents(const phys::PhysicsContext& ctx, int n_lo, int n_hi) {
  if (n_hi - n_lo < 4) throw std::invalid_argument("need at least five levels");
  std::vector<double> log_n, log_loss, log_r;
  for (int n = n_lo; n <= n_hi; ++n) {
    const phys::LPChannel ch = ctx.channel_for(n);
    const double loss = 1.0 - ch.p11;
    if (loss <= 0.0) throw std::domain_error("vanishing gate loss; log fit undefined");
    log_n.push_back(std::log(double(n)));
    log_loss.push_back(std::log(loss));
    log_r.push_back(std::log(ctx.max_radius(n)));
  }
  ScalingFit fit;
  fit.loss_slope = ols_slope(log_n, log_loss);
  fit.radius_slope = ols_slope(log_n, log_r);
  return fit;
}

}  // namespace rydnet::analysis
