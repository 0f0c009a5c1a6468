#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rydnet/circuit.hpp"
#include "rydnet/context.hpp"
#include "rydnet/statevector.hpp"

namespace rydnet::sim {

struct ShotOutcome {
  bool survived = false;
  int lost_at_gate = -1;          // op index of the loss, -1 if survived
  std::uint64_t bits = 0;         // register measurement when survived
};

enum class LossMethod { kDirect, kAncilla };

// Loss probability of one noisy gate on the current state:
// sum_ab (1 - p_ab) |c_ab|^2 block-wise.
double lp_loss_probability(const StateVector& s, int qa, int qb, const phys::LPChannel& ch);

// Deterministic surviving branch: scale |ab> components by sqrt(p_ab) times
// the channel phase, then renormalize.
void apply_lp_survivor(StateVector& s, int qa, int qb, const phys::LPChannel& ch);

// One noisy gate, loss sampled directly from the non-trace-preserving map.
// Returns false (and leaves the state unusable) when the shot is lost.
bool apply_lp_noisy(StateVector& s, int qa, int qb, const phys::LPChannel& ch, Rng& rng,
                    double* p_loss_out = nullptr);

// Same channel realized with an explicit ancilla: controlled y-rotations by
// arccos(sqrt(p_ab)) entangle the pair with a fresh ancilla whose |0> branch
// carries sqrt(p_ab); measuring the ancilla and keeping 0 reproduces the
// direct construction exactly.
bool apply_lp_ancilla(StateVector& s, int qa, int qb, const phys::LPChannel& ch, Rng& rng,
                      double* p_loss_out = nullptr);

// Monte-Carlo mean loss of a channel over Haar-random two-qubit states.
double estimate_avg_loss(const phys::LPChannel& ch, int samples, Rng& rng);

struct CircuitRunResult {
  long shots = 0;
  long survived = 0;
  std::vector<ShotOutcome> outcomes;   // filled when keep_log
  // Deterministic-delta closed form: survival probability of the full
  // circuit and the exact final state of the surviving branch.
  std::optional<double> exact_survival;
  std::optional<StateVector> exact_final_state;
};

struct RunOptions {
  long shots = 0;
  LossMethod method = LossMethod::kDirect;
  bool keep_log = false;
  bool exact_pass = true;  // skipped automatically in Gaussian delta mode
};

// Execute a compiled circuit from |0...0>: every compiled CZ applies its loss
// channel (plus the scattering Bernoulli), 1q ops apply exactly.
CircuitRunResult run_circuit(const bench::CompiledCircuit& c, const phys::PhysicsContext& ctx,
                             RngSpec rng, const RunOptions& opt);

}  // namespace rydnet::sim
