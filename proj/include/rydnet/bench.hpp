#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rydnet/circuit.hpp"
#include "rydnet/graph.hpp"
#include "rydnet/simulator.hpp"

namespace rydnet::bench {

// Quantum Fourier transform on q qubits, little-endian (qubit 0 = least
// significant bit), including the final reordering swaps, so the dense
// unitary is exactly the DFT matrix F[x][y] = w^{xy}/sqrt(N).
Circuit gen_qft(int q);

// Phase estimation of U = diag(1, e^{2 pi i theta}) with t counting qubits
// (lines 0..t-1) and one target (line t) prepared in the eigenstate |1>.
Circuit gen_qpe(int t, double theta);

// Ripple-carry adder on 2*bits + 2 lines:
// [carry-in, b0, a0, b1, a1, ..., z]. Sums the a-register into the
// b-register; z receives the carry, so (b0..b_{bits-1}, z) is the
// (bits+1)-bit output register.
Circuit gen_adder(int bits);
std::vector<int> adder_output_qubits(int bits);

enum class Family { kQft, kQpe, kAdder };
const char* family_name(Family f);
// Total qubit count of a family instance of the given width.
int family_qubits(Family f, int width);

// One runnable benchmark instance: a circuit whose noiseless output on the
// declared qubits is a single known bit pattern.
struct BenchInstance {
  Family family;
  int width = 0;  // qubit count of the instance
  Circuit circuit;
  std::vector<int> output_qubits;
  std::uint64_t expected = 0;
};

// qft: encode a random integer in phases (1q prep), run the inverse
//      transform, read the integer back.
// qpe: estimate a random exactly-representable eigenphase.
// adder: add two random integers.
BenchInstance make_instance(Family f, int width, Rng& input_rng);

// Map a reduced circuit onto the lattice (logical i starts at site
// (i % width, i / width)) and route every out-of-range CZ with swap chains
// from the interaction graph. Swaps permute the logical placement greedily,
// gate by gate.
CompiledCircuit map_and_route(const Circuit& reduced, const router::InteractionGraph& g,
                              const phys::PhysicsContext& ctx);

struct BenchmarkResult {
  std::string family;
  int width = 0;
  double r_max_over_a = 0.0;
  std::string strategy;
  double tau_scat_us = 0.0;
  long shots = 0;
  long correct = 0;
  double p_success = 0.0;
  double ci_low = 0.0;   // Wilson 95%
  double ci_high = 0.0;
  double survival = 0.0;
  long cz_pre = 0;
  long cz_post = 0;
};

// Wilson score interval for a binomial proportion.
void wilson_ci(long successes, long trials, double* lo, double* hi);

// Monte-Carlo success estimate of one compiled instance: a shot counts when
// it survives every gate and the output qubits read the expected pattern.
// shot_log (optional) receives every ShotOutcome.
BenchmarkResult success_probability(const BenchInstance& inst, const CompiledCircuit& compiled,
                                    const phys::PhysicsContext& ctx, RngSpec rng, long shots,
                                    std::vector<sim::ShotOutcome>* shot_log = nullptr);

}  // namespace rydnet::bench
