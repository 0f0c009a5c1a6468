#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rydnet/mat2.hpp"
#include "rydnet/rng.hpp"

namespace rydnet::sim {

// Dense state of num_qubits qubits, little-endian: amplitude index bit k is
// qubit k.
struct StateVector {
  int num_qubits = 0;
  std::vector<cplx> amp;

  StateVector() = default;
  explicit StateVector(int nq);  // |0...0>
  static StateVector basis(int nq, std::uint64_t bits);
  double norm_sq() const;
  void normalize();
};

StateVector haar_random_state(int nq, Rng& rng);

void apply_1q(StateVector& s, int q, const Mat2& u);

// Diagonal two-qubit operator: factors d[ab] applied to the |ab> components
// of the pair (a = qa's bit, b = qb's bit).
void apply_pair_diag(StateVector& s, int qa, int qb, const std::array<cplx, 4>& d);

// Probability weight of each pair configuration {00, 01, 10, 11}.
std::array<double, 4> pair_populations(const StateVector& s, int qa, int qb);

// Sample a full-register outcome from |amp|^2.
std::uint64_t sample_outcome(const StateVector& s, Rng& rng);

}  // namespace rydnet::sim
