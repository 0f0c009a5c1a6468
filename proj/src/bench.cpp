#include "rydnet/bench.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rydnet::bench {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRegister = 24;

void append(Circuit& c, const Circuit& part) {
  c.gates.insert(c.gates.end(), part.gates.begin(), part.gates.end());
}

// MAJ / UMA blocks of the ripple-carry adder (carry c, sum bit b, operand a).
void maj(Circuit& c, int cc, int b, int a) {
  c.gates.push_back(Gate::cx(a, b));
  c.gates.push_back(Gate::cx(a, cc));
  c.gates.push_back(Gate::ccx(cc, b, a));
}
void uma(Circuit& c, int cc, int b, int a) {
  c.gates.push_back(Gate::ccx(cc, b, a));
  c.gates.push_back(Gate::cx(a, cc));
  c.gates.push_back(Gate::cx(cc, b));
}

}  // namespace

Circuit gen_qft(int q) {
  if (q < 1) throw std::invalid_argument("qft needs at least one qubit");
  Circuit c;
  c.num_qubits = q;
  for (int j = q - 1; j >= 0; --j) {
    c.gates.push_back(Gate::h(j));
    for (int k = j - 1; k >= 0; --k)
      c.gates.push_back(Gate::cp(k, j, kPi / double(std::int64_t{1} << (j - k))));
  }
  for (int j = 0; j < q / 2; ++j) c.gates.push_back(Gate::swap(j, q - 1 - j));
  return c;
}

Circuit gen_qpe(int t, double theta) {
  if (t < 1) throw std::invalid_argument("qpe needs at least one counting qubit");
  if (theta < 0.0 || theta >= 1.0) throw std::invalid_argument("eigenphase must lie in [0,1)");
  Circuit c;
  c.num_qubits = t + 1;
  c.gates.push_back(Gate::x(t));  // eigenstate |1> of diag(1, e^{2 pi i theta})
  for (int j = 0; j < t; ++j) c.gates.push_back(Gate::h(j));
  for (int j = 0; j < t; ++j)
    c.gates.push_back(Gate::cp(j, t, 2.0 * kPi * theta * double(std::int64_t{1} << j)));
  append(c, gen_qft(t).inverse());
  return c;
}

Circuit gen_adder(int bits) {
  if (bits < 1) throw std::invalid_argument("adder needs at least one bit");
  Circuit c;
  c.num_qubits = 2 * bits + 2;
  const int z = 2 * bits + 1;
  auto b_line = [](int i) { return 1 + 2 * i; };
  auto a_line = [](int i) { return 2 + 2 * i; };
  maj(c, 0, b_line(0), a_line(0));
  for (int i = 1; i < bits; ++i) maj(c, a_line(i - 1), b_line(i), a_line(i));
  c.gates.push_back(Gate::cx(a_line(bits - 1), z));
  for (int i = bits - 1; i >= 1; --i) uma(c, a_line(i - 1), b_line(i), a_line(i));
  uma(c, 0, b_line(0), a_line(0));
  return c;
}

std::vector<int> adder_output_qubits(int bits) {
  std::vector<int> out;
  for (int i = 0; i < bits; ++i) out.push_back(1 + 2 * i);
  out.push_back(2 * bits + 1);
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kQft:
      return "qft";
    case Family::kQpe:
      return "qpe";
    case Family::kAdder:
      return "adder";
  }
  return "?";
}

int family_qubits(Family, int width) { return width; }

BenchInstance make_instance(Family f, int width, Rng& input_rng) {
  BenchInstance inst;
  inst.family = f;
  inst.width = width;
  switch (f) {
    case Family::kQft: {
      if (width < 1 || width > 30) throw std::invalid_argument("qft width out of range");
      const std::uint64_t x = input_rng.below(std::uint64_t{1} << width);
      Circuit c;
      c.num_qubits = width;
      // Prepare the transform of |x>: qubit k reads (|0> + e^{2 pi i x /
      // 2^{q-k}} |1>)/sqrt(2); the inverse transform then returns x.
      for (int k = 0; k < width; ++k) {
        c.gates.push_back(Gate::h(k));
        c.gates.push_back(
            Gate::phase(k, 2.0 * kPi * double(x) / double(std::int64_t{1} << (width - k))));
      }
      append(c, gen_qft(width).inverse());
      inst.circuit = std::move(c);
      inst.expected = x;
      for (int k = 0; k < width; ++k) inst.output_qubits.push_back(k);
      break;
    }
    case Family::kQpe: {
      if (width < 2 || width > 30) throw std::invalid_argument("qpe width out of range");
      const int t = width - 1;
      const std::uint64_t m = input_rng.below(std::uint64_t{1} << t);
      inst.circuit = gen_qpe(t, double(m) / double(std::int64_t{1} << t));
      inst.expected = m;
      for (int k = 0; k < t; ++k) inst.output_qubits.push_back(k);
      break;
    }
    case Family::kAdder: {
      if (width < 4 || width % 2 != 0)
        throw std::invalid_argument("adder width must be even, >= 4");
      const int bits = (width - 2) / 2;
      const std::uint64_t a = input_rng.below(std::uint64_t{1} << bits);
      const std::uint64_t b = input_rng.below(std::uint64_t{1} << bits);
      Circuit c;
      c.num_qubits = width;
      for (int i = 0; i < bits; ++i) {
        if ((b >> i) & 1) c.gates.push_back(Gate::x(1 + 2 * i));
        if ((a >> i) & 1) c.gates.push_back(Gate::x(2 + 2 * i));
      }
      append(c, gen_adder(bits));
      inst.circuit = std::move(c);
      inst.expected = a + b;
      inst.output_qubits = adder_output_qubits(bits);
      break;
    }
  }
  return inst;
}

CompiledCircuit map_and_route(const Circuit& reduced, const router::InteractionGraph& g,
                              const phys::PhysicsContext& ctx) {
  const int nq = reduced.num_qubits;
  if (nq > g.lattice.sites()) throw std::invalid_argument("circuit wider than the lattice");

  CompiledCircuit out;
  std::unordered_map<int, int> reg_of_site;
  std::vector<int> in_content;  // line -> whose input content sits there now
  auto line_of = [&](int site) {
    auto it = reg_of_site.find(site);
    if (it != reg_of_site.end()) return it->second;
    const int line = out.num_register++;
    if (out.num_register > kMaxRegister) throw std::runtime_error("routing register too large");
    reg_of_site.emplace(site, line);
    out.site_of_reg.push_back(site);
    in_content.push_back(line);
    return line;
  };

  std::vector<int> pos(nq);  // logical qubit -> lattice site
  for (int i = 0; i < nq; ++i) {
    pos[i] = g.lattice.index(i % g.lattice.width, i / g.lattice.width);
    out.logical_in.push_back(line_of(pos[i]));
  }

  const double phi = ctx.gate_params().phi;
  const Mat2 correction{cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, std::polar(1.0, -phi)};
  const Mat2 h = gate_matrix(Gate::h(0));

  auto emit_1q = [&](int line, const Mat2& u) {
    CompiledOp op;
    op.a = line;
    op.u = u;
    out.ops.push_back(op);
  };
  // One physical controlled-phase on an edge, trailed by the phase
  // corrections that turn the ideal channel into an exact CZ.
  auto emit_cz = [&](int site_u, int site_v) {
    const router::Edge* e = g.find_edge(site_u, site_v);
    if (!e) throw std::logic_error("missing edge in routed plan");
    CompiledOp op;
    op.is_cz = true;
    op.a = line_of(site_u);
    op.b = line_of(site_v);
    op.r_um = e->r_um;
    op.n = e->n;
    op.channel = ctx.channel_for(e->n);
    out.ops.push_back(op);
    emit_1q(op.a, correction);
    emit_1q(op.b, correction);
    ++out.cz_count_post;
  };
  auto emit_cx = [&](int site_c, int site_t) {
    emit_1q(line_of(site_t), h);
    emit_cz(site_c, site_t);
    emit_1q(line_of(site_t), h);
  };
  auto emit_swap = [&](int site_u, int site_v) {
    emit_cx(site_u, site_v);
    emit_cx(site_v, site_u);
    emit_cx(site_u, site_v);
    std::swap(in_content[line_of(site_u)], in_content[line_of(site_v)]);
    for (int l = 0; l < nq; ++l) {
      if (pos[l] == site_u)
        pos[l] = site_v;
      else if (pos[l] == site_v)
        pos[l] = site_u;
    }
  };

  for (const Gate& gate : reduced.gates) {
    if (gate.kind == Gate::Kind::kOneQ) {
      emit_1q(line_of(pos[gate.qubits[0]]), gate.u);
      continue;
    }
    if (gate.kind != Gate::Kind::kCz)
      throw std::invalid_argument("map_and_route expects a reduced circuit");
    ++out.cz_count_pre;
    const int s1 = pos[gate.qubits[0]], s2 = pos[gate.qubits[1]];
    if (g.find_edge(s1, s2)) {
      emit_cz(s1, s2);
      continue;
    }
    const router::SynthesisPlan plan = router::synthesize_cz(g, s1, s2);
    for (const router::PlanStep& step : plan.swaps) emit_swap(step.from, step.to);
    emit_cz(plan.cz_from, plan.cz_to);
  }

  out.logical_out.resize(nq);
  for (int l = 0; l < nq; ++l) out.logical_out[l] = line_of(pos[l]);
  out.line_perm.assign(out.num_register, -1);
  for (int line = 0; line < out.num_register; ++line) out.line_perm[in_content[line]] = line;
  return out;
}

void wilson_ci(long successes, long trials, double* lo, double* hi) {
  if (trials <= 0) {
    *lo = 0.0;
    *hi = 1.0;
    return;
  }
  const double z = 1.959963984540054;  // 95%
  const double n = double(trials);
  const double p = double(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  *lo = std::max(0.0, center - half);
  *hi = std::min(1.0, center + half);
}

BenchmarkResult success_probability(const BenchInstance& inst, const CompiledCircuit& compiled,
                                    const phys::PhysicsContext& ctx, RngSpec rng, long shots,
                                    std::vector<sim::ShotOutcome>* shot_log) {
  sim::RunOptions opt;
  opt.shots = shots;
  opt.keep_log = true;
  opt.exact_pass = false;
  const sim::CircuitRunResult run = sim::run_circuit(compiled, ctx, rng, opt);
  if (shot_log) *shot_log = run.outcomes;

  long correct = 0;
  for (const sim::ShotOutcome& o : run.outcomes) {
    if (!o.survived) continue;
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < inst.output_qubits.size(); ++i) {
      const int line = compiled.logical_out[inst.output_qubits[i]];
      value |= ((o.bits >> line) & 1u) << i;
    }
    correct += value == inst.expected;
  }

  BenchmarkResult res;
  res.family = family_name(inst.family);
  res.width = inst.width;
  res.shots = shots;
  res.correct = correct;
  res.p_success = shots > 0 ? double(correct) / double(shots) : 0.0;
  wilson_ci(correct, shots, &res.ci_low, &res.ci_high);
  res.survival = shots > 0 ? double(run.survived) / double(shots) : 0.0;
  res.cz_pre = compiled.cz_count_pre;
  res.cz_post = compiled.cz_count_post;
  return res;
}

}  // namespace rydnet::bench
