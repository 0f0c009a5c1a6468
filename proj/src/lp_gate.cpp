#include "rydnet/lp_gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydnet::phys {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_pm_pi(double x) { return std::remainder(x, kTwoPi); }

// Drive-phase jump that returns the singly driven ladder to the ground state
// after the second pulse, as a function of y = delta/omega and s = omega*tau.
double return_phase_jump(double y, double s) {
  const double rt = std::sqrt(y * y + 1.0);
  const double arg = 0.5 * s * rt;
  const cplx num(-rt * std::cos(arg), y * std::sin(arg));
  const cplx den(rt * std::cos(arg), y * std::sin(arg));
  double xi = -std::arg(num / den);
  if (xi < 0) xi += kTwoPi;
  return xi;
}

struct TwoPulseResult {
  cplx a01;  // ground-state amplitude of the omega ladder
  cplx a11;  // ground-state amplitude of the sqrt(2)*omega ladder
};

cplx ground_amplitude(double omega_eff, double detuning, double xi, double tau) {
  const Mat2 u1 = pulse_propagator(omega_eff, detuning, 0.0, tau);
  const Mat2 u2 = pulse_propagator(omega_eff, detuning, xi, tau);
  const Mat2 u = mul(u2, u1);
  return u[0];
}

TwoPulseResult evolve_pair(double omega, double detuning, double xi, double tau) {
  return {ground_amplitude(omega, detuning, xi, tau),
          ground_amplitude(std::numbers::sqrt2 * omega, detuning, xi, tau)};
}

// Controlled-phase condition residual at y = delta/omega (scale-free).
double phase_residual(double y) {
  const double rabi0 = std::sqrt(2.0 + y * y);
  const double tau = kTwoPi / rabi0;  // omega = 1 units
  const double xi = return_phase_jump(y, tau);
  const TwoPulseResult r = evolve_pair(1.0, y, xi, tau);
  const double phi = std::arg(r.a01);
  const double varphi = std::arg(r.a11);
  return wrap_pm_pi(varphi - (2.0 * phi - std::numbers::pi));
}

}  // namespace

Mat2 pulse_propagator(double omega_eff, double detuning, double phase, double duration) {
  // H = -(D/2) I + (1/2) n.sigma with n = (om cos b, om sin b, D) in the
  // {|g>, |e>} basis; exact exponential of the constant generator.
  const double rabi = std::hypot(omega_eff, detuning);
  const double half = 0.5 * rabi * duration;
  const double c = std::cos(half);
  // sin(half)/rabi, continuous at rabi -> 0.
  const double sn = rabi > 0 ? std::sin(half) / rabi : 0.5 * duration;
  const cplx lead = std::polar(1.0, 0.5 * detuning * duration);
  const cplx off = cplx(0.0, -1.0) * omega_eff * sn;
  return Mat2{lead * cplx(c, -detuning * sn), lead * off * std::polar(1.0, -phase),
              lead * off * std::polar(1.0, phase), lead * cplx(c, detuning * sn)};
}

double pair_rabi(double omega, double detuning) {
  return std::sqrt(2.0 * omega * omega + detuning * detuning);
}

LPGateParams solve_lp_params(const GateDrive& drive) {
  if (!(drive.omega > 0.0) || !std::isfinite(drive.omega))
    throw std::invalid_argument("drive omega must be positive and finite");
  double lo = 0.01, hi = 1.0;
  double flo = phase_residual(lo);
  const double fhi = phase_residual(hi);
  if (flo * fhi >= 0.0)
    throw std::runtime_error("controlled-phase condition not bracketed in (0.01, 1)");
  for (int i = 0; i < 80 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phase_residual(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double y = 0.5 * (lo + hi);

  LPGateParams p;
  p.delta = y * drive.omega;
  p.tau = kTwoPi / pair_rabi(drive.omega, p.delta);
  p.xi = return_phase_jump(y, drive.omega * p.tau);
  p.phi = std::arg(ground_amplitude(drive.omega, p.delta, p.xi, p.tau));
  return p;
}

std::pair<double, double> evolve_two_pulse(double omega_eff, double delta_nominal,
                                           double delta_error, const LPGateParams& params) {
  const cplx a = ground_amplitude(omega_eff, delta_nominal + delta_error, params.xi, params.tau);
  return {std::norm(a), std::arg(a)};
}

LPChannel lp_channel(const GateDrive& drive, const LPGateParams& params, double delta_error) {
  const auto [p01, phi] = evolve_two_pulse(drive.omega, params.delta, delta_error, params);
  const auto [p11, varphi] =
      evolve_two_pulse(std::numbers::sqrt2 * drive.omega, params.delta, delta_error, params);
  return LPChannel{p01, p01, p11, phi, varphi};
}

double p_loss_taylor(double omega, double delta_nominal, double delta_error) {
  const double rabi0 = pair_rabi(omega, delta_nominal);
  const double num = 2.0 * std::numbers::pi * std::numbers::pi * omega * omega * delta_error *
                     delta_error * delta_nominal * delta_nominal;
  return num / std::pow(rabi0, 6);
}

double scattering_prob(double gate_time_us, double tau_scat_us) {
  if (!(tau_scat_us > 0.0)) throw std::invalid_argument("tau_scat must be positive");
  if (std::isinf(tau_scat_us)) return 0.0;
  return -std::expm1(-gate_time_us / tau_scat_us);
}

LPChannel ideal_channel(const LPGateParams& params) {
  return LPChannel{1.0, 1.0, 1.0, params.phi, wrap_pm_pi(2.0 * params.phi - std::numbers::pi)};
}

}  // namespace rydnet::phys
