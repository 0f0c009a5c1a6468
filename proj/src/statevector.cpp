#include "rydnet/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace rydnet::sim {

StateVector::StateVector(int nq) : num_qubits(nq) {
  if (nq < 1 || nq > 26) throw std::invalid_argument("qubit count out of range [1,26]");
  amp.assign(std::size_t{1} << nq, cplx{0.0, 0.0});
  amp[0] = cplx{1.0, 0.0};
}

StateVector StateVector::basis(int nq, std::uint64_t bits) {
  StateVector s(nq);
  if (bits >> nq) throw std::out_of_range("basis label exceeds register width");
  s.amp[0] = cplx{0.0, 0.0};
  s.amp[bits] = cplx{1.0, 0.0};
  return s;
}

double StateVector::norm_sq() const {
  double n = 0.0;
  for (const cplx& a : amp) n += std::norm(a);
  return n;
}

void StateVector::normalize() {
  const double n = norm_sq();
  if (n <= 0.0) throw std::runtime_error("cannot normalize a zero state");
  const double inv = 1.0 / std::sqrt(n);
  for (cplx& a : amp) a *= inv;
}

void apply_1q(StateVector& s, int q, const Mat2& u) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  const std::uint64_t dim = s.amp.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const cplx a0 = s.amp[i];
    const cplx a1 = s.amp[i | bit];
    s.amp[i] = u[0] * a0 + u[1] * a1;
    s.amp[i | bit] = u[2] * a0 + u[3] * a1;
  }
}

void apply_pair_diag(StateVector& s, int qa, int qb, const std::array<cplx, 4>& d) {
  const std::uint64_t ba = std::uint64_t{1} << qa;
  const std::uint64_t bb = std::uint64_t{1} << qb;
  const std::uint64_t dim = s.amp.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const int idx = (i & ba ? 1 : 0) | (i & bb ? 2 : 0);
    s.amp[i] *= d[idx];
  }
}

std::array<double, 4> pair_populations(const StateVector& s, int qa, int qb) {
  const std::uint64_t ba = std::uint64_t{1} << qa;
  const std::uint64_t bb = std::uint64_t{1} << qb;
  std::array<double, 4> pop{0.0, 0.0, 0.0, 0.0};
  for (std::uint64_t i = 0; i < s.amp.size(); ++i)
    pop[(i & ba ? 1 : 0) | (i & bb ? 2 : 0)] += std::norm(s.amp[i]);
  return pop;
}

StateVector haar_random_state(int nq, Rng& rng) {
  StateVector s(nq);
  for (cplx& a : s.amp) a = cplx{rng.normal(), rng.normal()};
  s.normalize();
  return s;
}

std::uint64_t sample_outcome(const StateVector& s, Rng& rng) {
  const double u = rng.uniform() * s.norm_sq();
  double acc = 0.0;
  for (std::uint64_t i = 0; i < s.amp.size(); ++i) {
    acc += std::norm(s.amp[i]);
    if (u < acc) return i;
  }
  return s.amp.size() - 1;
}

}  // namespace rydnet::sim
