#include "rydnet/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydnet::bench {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Mat2 phase_matrix(double a) {
  return Mat2{cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, std::polar(1.0, a)};
}

// Appends the {kOneQ, kCz} lowering of g.
void lower(const Gate& g, std::vector<Gate>& out) {
  switch (g.kind) {
    case Gate::Kind::kOneQ:
    case Gate::Kind::kH:
    case Gate::Kind::kX:
    case Gate::Kind::kPhase:
      out.push_back(Gate::one_q(g.qubits[0], gate_matrix(g)));
      return;
    case Gate::Kind::kCz:
      out.push_back(g);
      return;
    case Gate::Kind::kCx: {
      const int c = g.qubits[0], t = g.qubits[1];
      lower(Gate::h(t), out);
      out.push_back(Gate::cz(c, t));
      lower(Gate::h(t), out);
      return;
    }
    case Gate::Kind::kCp: {
      const int c = g.qubits[0], t = g.qubits[1];
      const double a = g.angle;
      lower(Gate::phase(c, a / 2), out);
      lower(Gate::phase(t, a / 2), out);
      lower(Gate::cx(c, t), out);
      lower(Gate::phase(t, -a / 2), out);
      lower(Gate::cx(c, t), out);
      return;
    }
    case Gate::Kind::kSwap: {
      const int a = g.qubits[0], b = g.qubits[1];
      lower(Gate::cx(a, b), out);
      lower(Gate::cx(b, a), out);
      lower(Gate::cx(a, b), out);
      return;
    }
    case Gate::Kind::kCcx: {
      const int c1 = g.qubits[0], c2 = g.qubits[1], t = g.qubits[2];
      const double q = std::numbers::pi / 4;
      lower(Gate::h(t), out);
      lower(Gate::cx(c2, t), out);
      lower(Gate::phase(t, -q), out);
      lower(Gate::cx(c1, t), out);
      lower(Gate::phase(t, q), out);
      lower(Gate::cx(c2, t), out);
      lower(Gate::phase(t, -q), out);
      lower(Gate::cx(c1, t), out);
      lower(Gate::phase(c2, q), out);
      lower(Gate::phase(t, q), out);
      lower(Gate::h(t), out);
      lower(Gate::cx(c1, c2), out);
      lower(Gate::phase(c1, q), out);
      lower(Gate::phase(c2, -q), out);
      lower(Gate::cx(c1, c2), out);
      return;
    }
  }
  throw std::logic_error("unhandled gate kind");
}

}  // namespace

Mat2 gate_matrix(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::kOneQ:
      return g.u;
    case Gate::Kind::kH:
      return Mat2{cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0},
                  cplx{-kInvSqrt2, 0.0}};
    case Gate::Kind::kX:
      return Mat2{cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{0.0, 0.0}};
    case Gate::Kind::kPhase:
      return phase_matrix(g.angle);
    default:
      throw std::invalid_argument("gate_matrix: not a single-qubit gate");
  }
}

int Circuit::count(Gate::Kind k) const {
  int c = 0;
  for (const Gate& g : gates) c += g.kind == k;
  return c;
}

int Circuit::cz_count() const {
  int c = 0;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::kCz:
      case Gate::Kind::kCx:
        c += 1;
        break;
      case Gate::Kind::kCp:
        c += 2;
        break;
      case Gate::Kind::kSwap:
        c += 3;
        break;
      case Gate::Kind::kCcx:
        c += 6;
        break;
      default:
        break;
    }
  }
  return c;
}

Circuit Circuit::inverse() const {
  Circuit inv;
  inv.num_qubits = num_qubits;
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    switch (g.kind) {
      case Gate::Kind::kOneQ:
        g.u = dagger(g.u);
        break;
      case Gate::Kind::kPhase:
      case Gate::Kind::kCp:
        g.angle = -g.angle;
        break;
      default:
        break;  // H, X, CX, CZ, SWAP, CCX are self-inverse
    }
    inv.gates.push_back(g);
  }
  return inv;
}

Circuit basis_reduce(const Circuit& c) {
  Circuit out;
  out.num_qubits = c.num_qubits;
  for (const Gate& g : c.gates) lower(g, out.gates);
  return out;
}

}  // namespace rydnet::bench
