#include "rydnet/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rydnet::phys {

namespace {

void validate_level(const RydbergLevel& lvl) {
  if (lvl.n < 1) throw std::invalid_argument("level n must be >= 1, got " + std::to_string(lvl.n));
  if (!(std::isfinite(lvl.c6) && lvl.c6 != 0.0))
    throw std::invalid_argument("c6 must be finite and nonzero at n=" + std::to_string(lvl.n));
  if (!(std::isfinite(lvl.alpha) && lvl.alpha > 0.0))
    throw std::invalid_argument("alpha must be finite and positive at n=" + std::to_string(lvl.n));
}

}  // namespace

AtomicModel AtomicModel::from_table(std::vector<RydbergLevel> levels) {
  if (levels.empty()) throw std::invalid_argument("level table is empty");
  std::sort(levels.begin(), levels.end(),
            [](const RydbergLevel& a, const RydbergLevel& b) { return a.n < b.n; });
  for (std::size_t i = 0; i < levels.size(); ++i) {
    validate_level(levels[i]);
    if (i > 0 && levels[i].n == levels[i - 1].n)
      throw std::invalid_argument("duplicate level n=" + std::to_string(levels[i].n));
  }
  AtomicModel m;
  m.levels_ = std::move(levels);
  m.table_mode_ = true;
  return m;
}

AtomicModel AtomicModel::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open atomic table: " + path);
  std::string line;
  int lineno = 0;
  std::vector<RydbergLevel> levels;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != "n,c6_rad_us_um6,alpha_rad_us_per_Vcm2")
        throw std::runtime_error(path + ":1: unexpected header '" + line + "'");
      continue;
    }
    std::istringstream ss(line);
    RydbergLevel lvl;
    char c1 = 0, c2 = 0;
    if (!(ss >> lvl.n >> c1 >> lvl.c6 >> c2 >> lvl.alpha) || c1 != ',' || c2 != ',')
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row '" + line +
                               "'");
    levels.push_back(lvl);
  }
  if (levels.empty()) throw std::runtime_error(path + ": no data rows");
  return from_table(std::move(levels));
}

AtomicModel AtomicModel::power_law(const PowerLawModel& p) {
  if (p.n_ref < 1) throw std::invalid_argument("power law n_ref must be >= 1");
  if (!(std::isfinite(p.c6_ref) && p.c6_ref != 0.0))
    throw std::invalid_argument("power law c6_ref must be finite and nonzero");
  if (!(std::isfinite(p.alpha_ref) && p.alpha_ref > 0.0))
    throw std::invalid_argument("power law alpha_ref must be finite and positive");
  AtomicModel m;
  m.pl_ = p;
  m.table_mode_ = false;
  return m;
}

namespace {

const RydbergLevel& find_level(const std::vector<RydbergLevel>& levels, int n) {
  auto it = std::lower_bound(levels.begin(), levels.end(), n,
                             [](const RydbergLevel& l, int v) { return l.n < v; });
  if (it == levels.end() || it->n != n)
    throw std::out_of_range("level n=" + std::to_string(n) + " not in table (have " +
                            std::to_string(levels.front().n) + ".." +
                            std::to_string(levels.back().n) + ")");
  return *it;
}

}  // namespace

double AtomicModel::c6_of(int n) const {
  if (table_mode_) return find_level(levels_, n).c6;
  if (n < 1) throw std::out_of_range("level n must be >= 1");
  return pl_.c6_ref * std::pow(static_cast<double>(n) / pl_.n_ref, pl_.c6_exponent);
}

double AtomicModel::polarizability_of(int n) const {
  if (table_mode_) return find_level(levels_, n).alpha;
  if (n < 1) throw std::out_of_range("level n must be >= 1");
  return pl_.alpha_ref * std::pow(static_cast<double>(n) / pl_.n_ref, pl_.alpha_exponent);
}

int AtomicModel::min_n() const { return table_mode_ ? levels_.front().n : 1; }

int AtomicModel::max_n() const {
  return table_mode_ ? levels_.back().n : std::numeric_limits<int>::max();
}

double blockade_radius(double c6, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  return std::pow(std::abs(c6) / omega, 1.0 / 6.0);
}

double max_interaction_radius(double c6, double omega, double k_margin) {
  if (!(k_margin > 1.0)) throw std::invalid_argument("k_margin must exceed 1");
  return blockade_radius(c6, k_margin * omega);
}

double stark_detuning(double alpha, double e_field) {
  return 0.5 * alpha * e_field * e_field;
}

}  // namespace rydnet::phys
