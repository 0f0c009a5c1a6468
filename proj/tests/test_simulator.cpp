#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "rydnet/context.hpp"
#include "rydnet/simulator.hpp"
#include "rydnet/statevector.hpp"

using namespace rydnet;
using namespace rydnet::sim;

namespace {

const double kIs2 = 1.0 / std::sqrt(2.0);
const Mat2 kH{kIs2, kIs2, kIs2, -kIs2};

phys::LPChannel test_channel() {
  phys::LPChannel ch;
  ch.p01 = 0.9;
  ch.p10 = 0.8;
  ch.p11 = 0.5;
  ch.phi = 0.7;
  ch.varphi = -1.3;
  return ch;
}

phys::PhysicsContext make_ctx(double tau_scat_us, double sigma_e = -1.0) {
  phys::PowerLawModel pl;
  pl.n_ref = 70;
  pl.c6_ref = 10.0 * (2.0 * std::numbers::pi * 10.0) * std::pow(4.0, 6.0);
  pl.alpha_ref = 4200.0;
  phys::NoiseConfig noise;
  noise.e_field = 0.05;
  noise.tau_scat_us = tau_scat_us;
  if (sigma_e >= 0.0) {
    noise.delta_mode = phys::DeltaMode::kGaussian;
    noise.sigma_e = sigma_e;
  }
  return phys::PhysicsContext(phys::AtomicModel::power_law(pl),
                              phys::GateDrive{2.0 * std::numbers::pi * 10.0}, noise);
}

// Minimal compiled circuit: H on line 0, one noisy gate across (0, 1).
bench::CompiledCircuit two_qubit_compiled(const phys::LPChannel& ch) {
  bench::CompiledCircuit cc;
  cc.num_register = 2;
  cc.site_of_reg = {0, 1};
  cc.logical_in = {0, 1};
  cc.logical_out = {0, 1};
  cc.line_perm = {0, 1};
  bench::CompiledOp h;
  h.is_cz = false;
  h.a = 0;
  h.u = kH;
  bench::CompiledOp cz;
  cz.is_cz = true;
  cz.a = 0;
  cz.b = 1;
  cz.r_um = 4.0;
  cz.n = 70;
  cz.channel = ch;
  cc.ops = {h, cz};
  cc.cz_count_pre = 1;
  cc.cz_count_post = 1;
  return cc;
}

}  // namespace

TEST_CASE("state vector basics") {
  StateVector s(2);
  CHECK(s.amp.size() == 4);
  CHECK(s.amp[0] == cplx{1.0, 0.0});
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
  const StateVector b = StateVector::basis(3, 0b101);
  CHECK(b.amp[5] == cplx{1.0, 0.0});
  CHECK(b.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(27), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis(2, 4), std::out_of_range);
  StateVector z(1);
  z.amp = {cplx{0, 0}, cplx{0, 0}};
  CHECK_THROWS_AS(z.normalize(), std::runtime_error);

  Rng rng({7, 0});
  const StateVector h = haar_random_state(4, rng);
  CHECK(h.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pair populations and diagonal application use little-endian labels") {
  // (|00> + i|01>) / sqrt(2) with qubit 0 the fast bit.
  StateVector s(2);
  s.amp = {kIs2, cplx{0.0, kIs2}, 0.0, 0.0};
  const auto pop = pair_populations(s, 0, 1);
  CHECK(pop[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pop[1] == doctest::Approx(0.5).epsilon(1e-15));  // qa = qubit 0 set
  CHECK(pop[2] == doctest::Approx(0.0).epsilon(1e-15));
  // Swapping the roles of qa and qb transposes the label.
  const auto pop2 = pair_populations(s, 1, 0);
  CHECK(pop2[2] == doctest::Approx(0.5).epsilon(1e-15));

  apply_pair_diag(s, 0, 1, {cplx{1, 0}, cplx{0, 1}, cplx{2, 0}, cplx{3, 0}});
  CHECK(std::abs(s.amp[1] - cplx{-kIs2, 0.0}) < 1e-15);  // i * i/sqrt2
  CHECK(std::abs(s.amp[0] - cplx{kIs2, 0.0}) < 1e-15);
}

TEST_CASE("loss probability weighs channel survival by population") {
  const phys::LPChannel ch = test_channel();
  StateVector s00(2);
  CHECK(lp_loss_probability(s00, 0, 1, ch) == doctest::Approx(0.0).epsilon(1e-15));
  // Qubit 0 excited -> label 10 -> p10.
  CHECK(lp_loss_probability(StateVector::basis(2, 1), 0, 1, ch) ==
        doctest::Approx(1.0 - ch.p10).epsilon(1e-15));
  CHECK(lp_loss_probability(StateVector::basis(2, 2), 0, 1, ch) ==
        doctest::Approx(1.0 - ch.p01).epsilon(1e-15));
  CHECK(lp_loss_probability(StateVector::basis(2, 3), 0, 1, ch) ==
        doctest::Approx(1.0 - ch.p11).epsilon(1e-15));
  StateVector u(2);
  u.amp = {0.5, 0.5, 0.5, 0.5};
  CHECK(lp_loss_probability(u, 0, 1, ch) ==
        doctest::Approx(((1 - ch.p10) + (1 - ch.p01) + (1 - ch.p11)) / 4.0).epsilon(1e-15));
  CHECK_THROWS_AS(lp_loss_probability(u, 0, 0, ch), std::invalid_argument);
  CHECK_THROWS_AS(lp_loss_probability(u, 0, 2, ch), std::out_of_range);
}

TEST_CASE("survivor branch carries channel amplitudes and stays normalized") {
  const phys::LPChannel ch = test_channel();
  StateVector s(2);
  s.amp = {0.5, 0.5, 0.5, 0.5};
  apply_lp_survivor(s, 0, 1, ch);
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  const double nrm =
      std::sqrt(0.25 * (1.0 + ch.p10 + ch.p01 + ch.p11));
  CHECK(std::abs(s.amp[0] - cplx{0.5 / nrm, 0.0}) < 1e-12);
  CHECK(std::abs(s.amp[1] - 0.5 * std::polar(std::sqrt(ch.p10), ch.phi) / nrm) < 1e-12);
  CHECK(std::abs(s.amp[2] - 0.5 * std::polar(std::sqrt(ch.p01), ch.phi) / nrm) < 1e-12);
  CHECK(std::abs(s.amp[3] - 0.5 * std::polar(std::sqrt(ch.p11), ch.varphi) / nrm) < 1e-12);
}

TEST_CASE("direct and ancilla losses are shot-for-shot identical") {
  const phys::LPChannel ch = test_channel();
  int lost = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng prep({99, std::uint64_t(trial)});
    const StateVector init = haar_random_state(3, prep);
    StateVector sd = init, sa = init;
    Rng rd({5, std::uint64_t(trial)});
    Rng ra({5, std::uint64_t(trial)});
    double pd = 0.0, pa = 0.0;
    const bool okd = apply_lp_noisy(sd, 0, 2, ch, rd, &pd);
    const bool oka = apply_lp_ancilla(sa, 0, 2, ch, ra, &pa);
    CHECK(okd == oka);
    CHECK(pd == pa);
    if (!okd) {
      ++lost;
      continue;
    }
    for (std::size_t i = 0; i < sd.amp.size(); ++i) CHECK(std::abs(sd.amp[i] - sa.amp[i]) < 1e-10);
    CHECK(sa.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(lost > 0);  // the channel is lossy enough that some trials must fail
}

TEST_CASE("lost ancilla branch carries exactly the loss probability") {
  phys::LPChannel ch = test_channel();
  ch.p01 = ch.p10 = ch.p11 = 0.01;  // loses on roughly 3 of 4 shots
  bool exercised = false;
  for (std::uint64_t t = 0; t < 20 && !exercised; ++t) {
    Rng prep({3, t});
    StateVector s = haar_random_state(2, prep);
    const double p_loss = lp_loss_probability(s, 0, 1, ch);
    Rng rng({4, t});
    if (apply_lp_ancilla(s, 0, 1, ch, rng)) continue;
    CHECK(s.norm_sq() == doctest::Approx(p_loss).epsilon(1e-12));
    exercised = true;
  }
  CHECK(exercised);
}

TEST_CASE("loss sampling frequency matches the analytic probability") {
  const phys::LPChannel ch = test_channel();
  Rng prep({11, 0});
  const StateVector init = haar_random_state(2, prep);
  const double p = lp_loss_probability(init, 0, 1, ch);
  const int n = 20000;
  Rng rng({12, 0});
  int lost = 0;
  for (int i = 0; i < n; ++i) {
    StateVector s = init;
    if (!apply_lp_noisy(s, 0, 1, ch, rng)) ++lost;
  }
  const double sigma = std::sqrt(p * (1.0 - p) / n);
  CHECK(std::abs(double(lost) / n - p) < 4.0 * sigma);
}

TEST_CASE("sampled average loss converges to the Haar closed form") {
  Rng rng({21, 0});
  for (int k = 0; k < 5; ++k) {
    phys::LPChannel ch;
    ch.p01 = 0.5 + 0.5 * rng.uniform();
    ch.p10 = 0.5 + 0.5 * rng.uniform();
    ch.p11 = 0.5 + 0.5 * rng.uniform();
    const double est = estimate_avg_loss(ch, 20000, rng);
    CHECK(std::abs(est - phys::haar_mean_loss(ch)) < 0.01);
  }
  phys::LPChannel ch;
  Rng r2({22, 0});
  CHECK_THROWS_AS(estimate_avg_loss(ch, 0, r2), std::invalid_argument);
}

TEST_CASE("exact pass agrees with hand computation and Monte Carlo") {
  const phys::PhysicsContext ctx = make_ctx(std::numeric_limits<double>::infinity());
  const phys::LPChannel ch = test_channel();
  const bench::CompiledCircuit cc = two_qubit_compiled(ch);

  RunOptions opt;
  opt.shots = 40000;
  opt.keep_log = true;
  const CircuitRunResult res = run_circuit(cc, ctx, {31, 7}, opt);

  // H|0> puts half the weight on label 10 -> survival 1 - (1 - p10)/2.
  const double expect = 1.0 - 0.5 * (1.0 - ch.p10);
  REQUIRE(res.exact_survival.has_value());
  CHECK(*res.exact_survival == doctest::Approx(expect).epsilon(1e-12));

  REQUIRE(res.exact_final_state.has_value());
  const StateVector& fs = *res.exact_final_state;
  const double nrm = std::sqrt(expect);
  CHECK(std::abs(fs.amp[0] - cplx{kIs2 / nrm, 0.0}) < 1e-12);
  CHECK(std::abs(fs.amp[1] - kIs2 * std::polar(std::sqrt(ch.p10), ch.phi) / nrm) < 1e-12);
  CHECK(fs.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

  const double mc = double(res.survived) / double(res.shots);
  const double sigma = std::sqrt(expect * (1.0 - expect) / double(res.shots));
  CHECK(std::abs(mc - expect) < 4.0 * sigma);

  // Log integrity: survivors carry bits, losses carry the op index.
  REQUIRE(long(res.outcomes.size()) == res.shots);
  long survived = 0;
  for (const ShotOutcome& o : res.outcomes) {
    if (o.survived) {
      ++survived;
      CHECK(o.lost_at_gate == -1);
      CHECK(o.bits < 4);
    } else {
      CHECK(o.lost_at_gate == 1);  // only op 1 is lossy
    }
  }
  CHECK(survived == res.survived);
}

TEST_CASE("direct and ancilla methods give identical shot logs") {
  const phys::PhysicsContext ctx = make_ctx(std::numeric_limits<double>::infinity());
  const bench::CompiledCircuit cc = two_qubit_compiled(test_channel());
  RunOptions od;
  od.shots = 500;
  od.keep_log = true;
  od.method = LossMethod::kDirect;
  RunOptions oa = od;
  oa.method = LossMethod::kAncilla;
  const CircuitRunResult rd = run_circuit(cc, ctx, {77, 3}, od);
  const CircuitRunResult ra = run_circuit(cc, ctx, {77, 3}, oa);
  CHECK(rd.survived == ra.survived);
  REQUIRE(rd.outcomes.size() == ra.outcomes.size());
  for (std::size_t i = 0; i < rd.outcomes.size(); ++i) {
    CHECK(rd.outcomes[i].survived == ra.outcomes[i].survived);
    CHECK(rd.outcomes[i].lost_at_gate == ra.outcomes[i].lost_at_gate);
    CHECK(rd.outcomes[i].bits == ra.outcomes[i].bits);
  }
}

TEST_CASE("same seed reproduces runs exactly; different streams diverge") {
  const phys::PhysicsContext ctx = make_ctx(std::numeric_limits<double>::infinity());
  const bench::CompiledCircuit cc = two_qubit_compiled(test_channel());
  RunOptions opt;
  opt.shots = 64;
  opt.keep_log = true;
  const CircuitRunResult a = run_circuit(cc, ctx, {123, 9}, opt);
  const CircuitRunResult b = run_circuit(cc, ctx, {123, 9}, opt);
  REQUIRE(a.outcomes.size() == b.outcomes.size());
  bool identical = true;
  for (std::size_t i = 0; i < a.outcomes.size(); ++i)
    identical = identical && a.outcomes[i].survived == b.outcomes[i].survived &&
                a.outcomes[i].bits == b.outcomes[i].bits;
  CHECK(identical);
  const CircuitRunResult c = run_circuit(cc, ctx, {123, 10}, opt);
  bool same_as_a = a.survived == c.survived;
  for (std::size_t i = 0; same_as_a && i < a.outcomes.size(); ++i)
    same_as_a = a.outcomes[i].survived == c.outcomes[i].survived &&
                a.outcomes[i].bits == c.outcomes[i].bits;
  CHECK_FALSE(same_as_a);  // 64 shots on a fresh stream: collision odds ~ 0
}

TEST_CASE("scattering multiplies the closed-form survival per gate") {
  const bench::CompiledCircuit cc = two_qubit_compiled(test_channel());
  RunOptions opt;
  opt.shots = 0;
  const phys::PhysicsContext clean = make_ctx(std::numeric_limits<double>::infinity());
  const phys::PhysicsContext noisy = make_ctx(25.0);
  const double s_clean = *run_circuit(cc, clean, {1, 1}, opt).exact_survival;
  const double s_noisy = *run_circuit(cc, noisy, {1, 1}, opt).exact_survival;
  CHECK(noisy.p_scat() > 0.0);
  CHECK(s_noisy / s_clean == doctest::Approx(1.0 - noisy.p_scat()).epsilon(1e-12));
}

TEST_CASE("gaussian field mode skips the closed form and matches in distribution") {
  RunOptions opt;
  opt.shots = 4000;
  const phys::PhysicsContext det = make_ctx(std::numeric_limits<double>::infinity());
  const phys::PhysicsContext gauss = make_ctx(std::numeric_limits<double>::infinity(), 0.0);
  // The compiled channel must belong to the context: gaussian shots rebuild
  // it per gate from the drawn field, deterministic shots use it as compiled.
  const bench::CompiledCircuit cc = two_qubit_compiled(det.channel_for(70));

  const CircuitRunResult rg = run_circuit(cc, gauss, {55, 1}, opt);
  CHECK_FALSE(rg.exact_survival.has_value());
  CHECK_FALSE(rg.exact_final_state.has_value());

  // In gaussian mode the compiled channel is rebuilt per gate from the drawn
  // field; with sigma_e = 0 that rebuild must reproduce the deterministic
  // channel, so survival agrees within Monte-Carlo error.
  const CircuitRunResult rd = run_circuit(cc, det, {55, 2}, opt);
  const double pg = double(rg.survived) / double(opt.shots);
  const double pd = double(rd.survived) / double(opt.shots);
  const double sigma = std::sqrt(0.5 * 0.5 / double(opt.shots)) * 2.0;
  CHECK(std::abs(pg - pd) < 4.0 * sigma);
}

TEST_CASE("run_circuit validates its register") {
  const phys::PhysicsContext ctx = make_ctx(std::numeric_limits<double>::infinity());
  bench::CompiledCircuit cc;
  cc.num_register = 0;
  RunOptions opt;
  CHECK_THROWS_AS(run_circuit(cc, ctx, {1, 1}, opt), std::invalid_argument);
}
