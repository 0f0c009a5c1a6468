#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rydnet/lp_gate.hpp"
#include "rydnet/mat2.hpp"

namespace rydnet::bench {

// Generator-level gate alphabet. basis_reduce lowers everything to
// {kOneQ, kCz}.
struct Gate {
  enum class Kind { kOneQ, kH, kX, kPhase, kCx, kCz, kCp, kSwap, kCcx };
  Kind kind = Kind::kOneQ;
  std::vector<int> qubits;  // 1, 2 or 3 lines; controls first, target last
  double angle = 0.0;       // kPhase / kCp
  Mat2 u = kIdentity2;      // kOneQ

  static Gate one_q(int q, const Mat2& m) { return {Kind::kOneQ, {q}, 0.0, m}; }
  static Gate h(int q) { return {Kind::kH, {q}, 0.0, kIdentity2}; }
  static Gate x(int q) { return {Kind::kX, {q}, 0.0, kIdentity2}; }
  static Gate phase(int q, double a) { return {Kind::kPhase, {q}, a, kIdentity2}; }
  static Gate cx(int c, int t) { return {Kind::kCx, {c, t}, 0.0, kIdentity2}; }
  static Gate cz(int a, int b) { return {Kind::kCz, {a, b}, 0.0, kIdentity2}; }
  static Gate cp(int a, int b, double ang) { return {Kind::kCp, {a, b}, ang, kIdentity2}; }
  static Gate swap(int a, int b) { return {Kind::kSwap, {a, b}, 0.0, kIdentity2}; }
  static Gate ccx(int c1, int c2, int t) { return {Kind::kCcx, {c1, c2, t}, 0.0, kIdentity2}; }
};

// The 2x2 matrix of a single-qubit gate kind.
Mat2 gate_matrix(const Gate& g);

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  int count(Gate::Kind k) const;
  int cz_count() const;  // two-qubit entangling gates after reduction
  Circuit inverse() const;
};

// Lower to single-qubit unitaries + CZ. Dense-equivalent to the input
// (up to global phase) by construction of each decomposition.
Circuit basis_reduce(const Circuit& c);

// A compiled operation on the register of touched atoms. CZ ops carry their
// lattice annotation.
struct CompiledOp {
  bool is_cz = false;
  int a = 0;
  int b = 0;       // cz only
  Mat2 u = kIdentity2;  // 1q only
  double r_um = 0.0;
  int n = 0;
  phys::LPChannel channel;  // deterministic-delta channel of this edge
};

struct CompiledCircuit {
  int num_register = 0;            // atoms that participate
  std::vector<int> site_of_reg;    // register line -> lattice site
  std::vector<int> logical_in;     // logical qubit -> register line at input
  std::vector<int> logical_out;    // logical qubit -> register line at output
  std::vector<int> line_perm;      // register line l's input content ends on line_perm[l]
  std::vector<CompiledOp> ops;
  int cz_count_pre = 0;
  int cz_count_post = 0;
};

}  // namespace rydnet::bench
