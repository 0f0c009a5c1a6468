#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rydnet {

// Seed + stream pair. Distinct streams from the same seed give statistically
// independent sequences, so parallel work items can draw reproducibly.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Deterministic generator wrapper. Variate generation is hand-rolled on the
// raw engine bits (not std::uniform_real_distribution and friends, whose
// output is implementation-defined), so identical (seed, stream) pairs give
// identical sequences everywhere.
class Rng {
 public:
  explicit Rng(RngSpec spec) {
    std::seed_seq seq{spec.seed & 0xffffffffu,       spec.seed >> 32,
                      spec.stream & 0xffffffffu,     spec.stream >> 32,
                      std::uint64_t{0x9e3779b97f4a7c15}};
    gen_.seed(seq);
  }

  std::uint64_t bits() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo bias is negligible for our n (<< 2^32), but use
    // rejection anyway so distributions are exact.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Standard normal via the Marsaglia polar method.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rydnet
