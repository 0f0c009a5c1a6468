#pragma once

#include <string>
#include <vector>

namespace rydnet::phys {

// One Rydberg level. Units: c6 in rad/us * um^6, alpha in rad/us per (V/cm)^2
// (angular frequency convention, hbar = 1).
struct RydbergLevel {
  int n = 0;
  double c6 = 0.0;
  double alpha = 0.0;
};

// c6/alpha power-law model: X(n) = X_ref * (n / n_ref)^exponent.
struct PowerLawModel {
  int n_ref = 70;
  double c6_ref = 0.0;
  double alpha_ref = 0.0;
  double c6_exponent = 12.0;
  double alpha_exponent = 7.0;
};

// Level data source: either an explicit table (sorted by n) or a power law.
class AtomicModel {
 public:
  static AtomicModel from_table(std::vector<RydbergLevel> levels);
  static AtomicModel from_csv(const std::string& path);
  static AtomicModel power_law(const PowerLawModel& p);

  double c6_of(int n) const;
  double polarizability_of(int n) const;

  bool is_table() const { return table_mode_; }
  const std::vector<RydbergLevel>& table() const { return levels_; }
  const PowerLawModel& power_law_params() const { return pl_; }

  // Inclusive level bounds. A power-law model is unbounded above.
  int min_n() const;
  int max_n() const;

 private:
  AtomicModel() = default;
  std::vector<RydbergLevel> levels_;
  PowerLawModel pl_{};
  bool table_mode_ = false;
};

// Distance at which the pair interaction |c6|/r^6 equals the drive Rabi
// frequency: r_b = (|c6| / omega)^(1/6).
double blockade_radius(double c6, double omega);

// Largest radius the level supports for gates: the interaction must exceed
// the drive by the margin factor k > 1, i.e. r_max = (|c6| / (k*omega))^(1/6).
double max_interaction_radius(double c6, double omega, double k_margin);

// Quadratic Stark shift of the Rydberg level expressed as a detuning error:
// delta = alpha * E^2 / 2  (rad/us).
double stark_detuning(double alpha, double e_field);

}  // namespace rydnet::phys
