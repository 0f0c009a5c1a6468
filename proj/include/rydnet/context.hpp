#pragma once

#include "rydnet/atomic.hpp"
#include "rydnet/lp_gate.hpp"

namespace rydnet::phys {

// Bundles the atomic data, drive, and noise model, with the gate parameters
// solved once. All queries are pure; instances are safe to share across
// threads once constructed.
class PhysicsContext {
 public:
  PhysicsContext(AtomicModel model, GateDrive drive, NoiseConfig noise);

  const AtomicModel& model() const { return model_; }
  const GateDrive& drive() const { return drive_; }
  const NoiseConfig& noise() const { return noise_; }
  const LPGateParams& gate_params() const { return params_; }

  double gate_time() const { return lp_gate_time(params_); }
  // Per-gate scattering loss at the configured tau_scat (0 if disabled).
  double p_scat() const { return p_scat_; }

  // Stark detuning error of level n at the configured field.
  double stark_shift(int n) const;

  // Channel of a gate run on level n with the deterministic field error.
  LPChannel channel_for(int n) const;
  // Channel at an explicit detuning error (Gaussian mode draws one per gate).
  LPChannel channel_for_delta(double delta_error) const;

  // State-averaged loss of the level-n channel (field noise only).
  double cz_loss(int n) const;
  // Per-gate survival with scattering folded in:
  // (1 - cz_loss(n)) * (1 - p_scat).
  double gate_survival(int n) const;
  // Combined per-gate loss, 1 - gate_survival(n).
  double gate_loss(int n) const;

  double max_radius(int n) const;

 private:
  AtomicModel model_;
  GateDrive drive_;
  NoiseConfig noise_;
  LPGateParams params_;
  double p_scat_ = 0.0;
};

}  // namespace rydnet::phys
