#pragma once

#include <utility>

#include "rydnet/mat2.hpp"

namespace rydnet::phys {

// Global two-photon Rabi drive, rad/us.
struct GateDrive {
  double omega = 0.0;
};

// Solved two-pulse controlled-phase parameters for a given drive:
// two pulses of duration tau at detuning delta; the second pulse's drive
// phase is advanced by xi. phi is the ideal single-excitation phase.
struct LPGateParams {
  double delta = 0.0;  // rad/us
  double tau = 0.0;    // us
  double xi = 0.0;     // rad
  double phi = 0.0;    // rad
};

// Computational-basis action of the noisy gate: |ab> survives with
// probability p_ab and picks up a phase (p00 = 1, phase 0 implicit).
// phi applies to |01>/|10>, varphi to |11>.
struct LPChannel {
  double p01 = 1.0;
  double p10 = 1.0;
  double p11 = 1.0;
  double phi = 0.0;     // rad
  double varphi = 0.0;  // rad
};

enum class DeltaMode { kDeterministic, kGaussian };

struct NoiseConfig {
  double e_field = 0.01;      // V/cm
  double tau_scat_us = 50.0;  // photon-scattering time; +infinity disables
  double k_margin = 10.0;     // blockade margin factor (> 1)
  DeltaMode delta_mode = DeltaMode::kDeterministic;
  // Gaussian mode: the field seen by each gate is drawn as
  // E_g ~ N(e_field, sigma_e); Deterministic ignores this.
  double sigma_e = 0.0;  // V/cm
};

// Exact propagator of one constant pulse on a driven two-level system
// {|g>, |e>}:  H = (omega_eff/2)(e^{i phase}|e><g| + h.c.) - detuning |e><e|.
Mat2 pulse_propagator(double omega_eff, double detuning, double phase, double duration);

// Generalized Rabi frequency sqrt(2*omega^2 + detuning^2) of the doubly
// driven pair state.
double pair_rabi(double omega, double detuning);

// Numerically solve the controlled-phase condition for the drive. The root
// delta/omega is bracketed in (0.01, 1) and bisected to 1e-12.
LPGateParams solve_lp_params(const GateDrive& drive);

// Two-pulse evolution of one ladder starting in the ground state, with the
// detuning perturbed by delta_error. Returns (return population, phase).
std::pair<double, double> evolve_two_pulse(double omega_eff, double delta_nominal,
                                           double delta_error, const LPGateParams& params);

// Full channel at a given detuning error: |01>/|10> evolve at omega,
// |11> at sqrt(2)*omega.
LPChannel lp_channel(const GateDrive& drive, const LPGateParams& params, double delta_error);

// Leading-order |11> loss, 2 pi^2 omega^2 delta_err^2 delta^2 / rabi0^6.
// Diagnostic only; the evolved channel is authoritative.
double p_loss_taylor(double omega, double delta_nominal, double delta_error);

// Probability that at least one photon scatters during a gate of the given
// duration: 1 - exp(-gate_time / tau_scat).
double scattering_prob(double gate_time_us, double tau_scat_us);

// Total two-pulse gate duration, 2*tau.
inline double lp_gate_time(const LPGateParams& params) { return 2.0 * params.tau; }

// Loss probability averaged over Haar-random two-qubit states:
// 1 - (1 + p01 + p10 + p11)/4.
inline double haar_mean_loss(const LPChannel& ch) {
  return 1.0 - (1.0 + ch.p01 + ch.p10 + ch.p11) / 4.0;
}

// The noiseless channel (survival 1 everywhere, phases phi and 2*phi - pi).
LPChannel ideal_channel(const LPGateParams& params);

}  // namespace rydnet::phys
