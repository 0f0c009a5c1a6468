#include "rydnet/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace rydnet::sim {

namespace {

void check_pair(const StateVector& s, int qa, int qb) {
  if (qa == qb) throw std::invalid_argument("gate qubits coincide");
  if (qa < 0 || qb < 0 || qa >= s.num_qubits || qb >= s.num_qubits)
    throw std::out_of_range("gate qubit out of range");
}

// Per-pair-label survival probabilities and phases; label bit 0 = qa, bit 1
// = qb, so index 1 is |qa=1, qb=0>.
std::array<double, 4> label_survival(const phys::LPChannel& ch) {
  return {1.0, ch.p10, ch.p01, ch.p11};
}
std::array<double, 4> label_phase(const phys::LPChannel& ch) {
  return {0.0, ch.phi, ch.phi, ch.varphi};
}

}  // namespace

double lp_loss_probability(const StateVector& s, int qa, int qb, const phys::LPChannel& ch) {
  check_pair(s, qa, qb);
  const std::array<double, 4> pop = pair_populations(s, qa, qb);
  const std::array<double, 4> p = label_survival(ch);
  double loss = 0.0;
  for (int i = 1; i < 4; ++i) loss += (1.0 - p[i]) * pop[i];
  return loss;
}

void apply_lp_survivor(StateVector& s, int qa, int qb, const phys::LPChannel& ch) {
  check_pair(s, qa, qb);
  const std::array<double, 4> p = label_survival(ch);
  const std::array<double, 4> th = label_phase(ch);
  std::array<cplx, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = std::polar(std::sqrt(p[i]), th[i]);
  apply_pair_diag(s, qa, qb, d);
  s.normalize();
}

bool apply_lp_noisy(StateVector& s, int qa, int qb, const phys::LPChannel& ch, Rng& rng,
                    double* p_loss_out) {
  const double p_loss = lp_loss_probability(s, qa, qb, ch);
  if (p_loss_out) *p_loss_out = p_loss;
  if (rng.uniform() < p_loss) return false;
  apply_lp_survivor(s, qa, qb, ch);
  return true;
}

bool apply_lp_ancilla(StateVector& s, int qa, int qb, const phys::LPChannel& ch, Rng& rng,
                      double* p_loss_out) {
  check_pair(s, qa, qb);
  // The ancilla-|1> population after the controlled rotations is
  // sum_ab sin^2(w_ab) |c_ab|^2 = sum_ab (1 - p_ab) |c_ab|^2, identical to
  // the direct loss probability, so the same Bernoulli draw decides both
  // methods and the two stay shot-for-shot equivalent.
  const double p_loss = lp_loss_probability(s, qa, qb, ch);
  if (p_loss_out) *p_loss_out = p_loss;
  const bool survived = rng.uniform() >= p_loss;

  // Explicit ancilla register: start in |0>, rotate by w_ab = arccos(sqrt
  // p_ab) controlled on the pair label, with the survivor phase riding on
  // the |0> branch.
  const std::array<double, 4> p = label_survival(ch);
  const std::array<double, 4> th = label_phase(ch);
  std::array<double, 4> w;
  for (int i = 0; i < 4; ++i) w[i] = std::acos(std::sqrt(p[i]));

  const std::uint64_t ba = std::uint64_t{1} << qa;
  const std::uint64_t bb = std::uint64_t{1} << qb;
  const std::uint64_t dim = s.amp.size();
  std::vector<cplx> anc0(dim), anc1(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    const int idx = (i & ba ? 1 : 0) | (i & bb ? 2 : 0);
    anc0[i] = s.amp[i] * std::polar(std::cos(w[idx]), th[idx]);
    anc1[i] = s.amp[i] * std::sin(w[idx]);
  }
  if (!survived) {
    s.amp = std::move(anc1);  // lost branch, left unnormalized and unused
    return false;
  }
  s.amp = std::move(anc0);  // project onto ancilla = 0
  s.normalize();
  return true;
}

double estimate_avg_loss(const phys::LPChannel& ch, int samples, Rng& rng) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  double acc = 0.0;
  for (int i = 0; i < samples; ++i) {
    const StateVector s = haar_random_state(2, rng);
    acc += lp_loss_probability(s, 0, 1, ch);
  }
  return acc / samples;
}

CircuitRunResult run_circuit(const bench::CompiledCircuit& c, const phys::PhysicsContext& ctx,
                             RngSpec spec, const RunOptions& opt) {
  if (c.num_register < 1) throw std::invalid_argument("empty register");
  const bool gaussian = ctx.noise().delta_mode == phys::DeltaMode::kGaussian;
  const double p_scat = ctx.p_scat();

  CircuitRunResult res;
  res.shots = opt.shots;

  if (opt.exact_pass && !gaussian) {
    StateVector s(c.num_register);
    double survival = 1.0;
    for (const bench::CompiledOp& op : c.ops) {
      if (!op.is_cz) {
        apply_1q(s, op.a, op.u);
        continue;
      }
      survival *= (1.0 - lp_loss_probability(s, op.a, op.b, op.channel)) * (1.0 - p_scat);
      apply_lp_survivor(s, op.a, op.b, op.channel);
    }
    res.exact_survival = survival;
    res.exact_final_state = std::move(s);
  }

  Rng rng(spec);
  if (opt.keep_log) res.outcomes.reserve(opt.shots);
  for (long shot = 0; shot < opt.shots; ++shot) {
    StateVector s(c.num_register);
    ShotOutcome o;
    o.survived = true;
    for (std::size_t gi = 0; gi < c.ops.size() && o.survived; ++gi) {
      const bench::CompiledOp& op = c.ops[gi];
      if (!op.is_cz) {
        apply_1q(s, op.a, op.u);
        continue;
      }
      phys::LPChannel ch = op.channel;
      if (gaussian) {
        const double e = ctx.noise().e_field + ctx.noise().sigma_e * rng.normal();
        ch = ctx.channel_for_delta(
            phys::stark_detuning(ctx.model().polarizability_of(op.n), e));
      }
      bool ok = opt.method == LossMethod::kDirect ? apply_lp_noisy(s, op.a, op.b, ch, rng)
                                                  : apply_lp_ancilla(s, op.a, op.b, ch, rng);
      if (ok && p_scat > 0.0) ok = rng.uniform() >= p_scat;
      if (!ok) {
        o.survived = false;
        o.lost_at_gate = static_cast<int>(gi);
      }
    }
    if (o.survived) {
      o.bits = sample_outcome(s, rng);
      ++res.survived;
    }
    if (opt.keep_log) res.outcomes.push_back(o);
  }
  return res;
}

}  // namespace rydnet::sim
