#include "rydnet/context.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rydnet::phys {

PhysicsContext::PhysicsContext(AtomicModel model, GateDrive drive, NoiseConfig noise)
    : model_(std::move(model)), drive_(drive), noise_(noise) {
  if (!(noise_.e_field >= 0.0)) throw std::invalid_argument("e_field must be >= 0");
  if (!(noise_.tau_scat_us > 0.0)) throw std::invalid_argument("tau_scat must be positive");
  if (!(noise_.k_margin > 1.0)) throw std::invalid_argument("k_margin must exceed 1");
  if (!(noise_.sigma_e >= 0.0)) throw std::invalid_argument("sigma_e must be >= 0");
  params_ = solve_lp_params(drive_);
  p_scat_ = scattering_prob(lp_gate_time(params_), noise_.tau_scat_us);
}

double PhysicsContext::stark_shift(int n) const {
  return stark_detuning(model_.polarizability_of(n), noise_.e_field);
}

LPChannel PhysicsContext::channel_for(int n) const { return channel_for_delta(stark_shift(n)); }

LPChannel PhysicsContext::channel_for_delta(double delta_error) const {
  return lp_channel(drive_, params_, delta_error);
}

double PhysicsContext::cz_loss(int n) const { return haar_mean_loss(channel_for(n)); }

double PhysicsContext::gate_survival(int n) const {
  return (1.0 - cz_loss(n)) * (1.0 - p_scat_);
}

double PhysicsContext::gate_loss(int n) const { return 1.0 - gate_survival(n); }

double PhysicsContext::max_radius(int n) const {
  return max_interaction_radius(model_.c6_of(n), drive_.omega, noise_.k_margin);
}

}  // namespace rydnet::phys
