#pragma once

// Shared helpers for the test suite.  The dense-circuit interpreter here is an
// independent oracle: it applies every gate kind by direct index arithmetic,
// without going through Circuit::basis_reduce or the simulator.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "rydnet/circuit.hpp"

namespace testutil {

using cplx = std::complex<double>;

inline double wrap_pm_pi(double a) {
  return std::remainder(a, 2.0 * std::numbers::pi);
}

inline double mod_2pi(double a) {
  double m = std::fmod(a, 2.0 * std::numbers::pi);
  if (m < 0) m += 2.0 * std::numbers::pi;
  return m;
}

// Column-major dense operator on nq qubits: mat[col] = U |col>.
using Dense = std::vector<std::vector<cplx>>;

inline Dense dense_identity(int nq) {
  std::size_t dim = std::size_t{1} << nq;
  Dense m(dim, std::vector<cplx>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

// Apply a single gate to one state vector, little-endian (bit k = qubit k).
inline void apply_gate_ref(std::vector<cplx>& amp, const rydnet::bench::Gate& g) {
  using Kind = rydnet::bench::Gate::Kind;
  auto bit = [](int q) { return std::size_t{1} << q; };
  const std::size_t dim = amp.size();
  auto apply_2x2 = [&](int q, cplx m00, cplx m01, cplx m10, cplx m11) {
    const std::size_t b = bit(q);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & b) continue;
      cplx a0 = amp[i], a1 = amp[i | b];
      amp[i] = m00 * a0 + m01 * a1;
      amp[i | b] = m10 * a0 + m11 * a1;
    }
  };
  const double is2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case Kind::kOneQ:
      apply_2x2(g.qubits[0], g.u[0], g.u[1], g.u[2], g.u[3]);
      break;
    case Kind::kH:
      apply_2x2(g.qubits[0], is2, is2, is2, -is2);
      break;
    case Kind::kX:
      apply_2x2(g.qubits[0], 0.0, 1.0, 1.0, 0.0);
      break;
    case Kind::kPhase:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & bit(g.qubits[0])) amp[i] *= std::polar(1.0, g.angle);
      break;
    case Kind::kCz:
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & bit(g.qubits[0])) && (i & bit(g.qubits[1]))) amp[i] = -amp[i];
      break;
    case Kind::kCx:
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & bit(g.qubits[0])) && !(i & bit(g.qubits[1])))
          std::swap(amp[i], amp[i | bit(g.qubits[1])]);
      break;
    case Kind::kCp:
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & bit(g.qubits[0])) && (i & bit(g.qubits[1])))
          amp[i] *= std::polar(1.0, g.angle);
      break;
    case Kind::kSwap:
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & bit(g.qubits[0])) && !(i & bit(g.qubits[1])))
          std::swap(amp[i], amp[(i & ~bit(g.qubits[0])) | bit(g.qubits[1])]);
      break;
    case Kind::kCcx:
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & bit(g.qubits[0])) && (i & bit(g.qubits[1])) && !(i & bit(g.qubits[2])))
          std::swap(amp[i], amp[i | bit(g.qubits[2])]);
      break;
  }
}

// Full dense unitary of a circuit via the reference interpreter.
inline Dense circuit_unitary_ref(const rydnet::bench::Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.num_qubits;
  Dense m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<cplx> amp(dim, 0.0);
    amp[col] = 1.0;
    for (const auto& g : c.gates) apply_gate_ref(amp, g);
    m[col] = std::move(amp);
  }
  return m;
}

// Max |A - e^{i gamma} B| over all entries, with gamma chosen from the largest
// entry of A.  Zero iff A and B agree up to a global phase.
inline double dense_distance_up_to_phase(const Dense& a, const Dense& b) {
  std::size_t ic = 0, ir = 0;
  double best = -1.0;
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t r = 0; r < a[c].size(); ++r)
      if (std::abs(a[c][r]) > best) { best = std::abs(a[c][r]); ic = c; ir = r; }
  if (best <= 0.0) return 1.0;
  if (std::abs(b[ic][ir]) == 0.0) return 1.0;
  cplx phase = a[ic][ir] / b[ic][ir];
  phase /= std::abs(phase);
  double dist = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t r = 0; r < a[c].size(); ++r)
      dist = std::max(dist, std::abs(a[c][r] - phase * b[c][r]));
  return dist;
}

}  // namespace testutil
