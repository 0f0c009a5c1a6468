#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rydnet/context.hpp"
#include "rydnet/lattice.hpp"

namespace rydnet::cli {

// Configuration error with file/line or flag context in what().
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // [atoms]
  std::string table_path = "data/rb87_ns.csv";  // RYDNET_DATA env overrides
  bool use_power_law = false;
  phys::PowerLawModel power_law{};  // c6_ref/alpha_ref required when enabled

  // [drive]
  double omega = 6.283185307179586;  // rad/us (1 MHz linear)

  // [noise]
  phys::NoiseConfig noise{};

  // [lattice]
  router::LatticeSpec lattice{10, 10, 4.0};

  // [route] (also the heatmap sweep)
  std::vector<double> r_max_over_a{1.0, 1.4142135623730951, 2.0, 2.23606797749979, 3.0};
  std::string strategy = "graded";
  int from_x = 0, from_y = 0;
  int to_x = 9, to_y = 9;

  // [sweetspot]
  double hops = 14.0;
  int grid_points = 60;
  std::vector<double> tau_scat_list_us{};  // empty -> 8 log-spaced in [20, 1e5]

  // [bench]
  std::vector<std::string> families{"qft", "adder"};
  std::vector<int> qft_widths{6, 9};
  std::vector<int> qpe_widths{6, 8};
  std::vector<int> adder_widths{6, 10};
  long shots = 500;
  int inputs = 30;
  bool bench_compact_lattice = true;  // smallest near-square grid per instance
  bool shot_log = false;

  std::uint64_t seed = 0;
  std::string outdir = "out";
};

RunConfig default_config();

// Parse a line-oriented `key = value` file with [section] headers and
// '#' comments over the defaults. Unknown keys, bad values, and a missing
// file raise ConfigError with line context.
RunConfig parse_config_file(const std::string& path);

// Apply one dotted key (e.g. "noise.e_field") to the config; context names
// the source (file:line or flag) for error messages.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value,
               const std::string& context);

// RYDNET_DATA environment variable overrides the table path.
void apply_env(RunConfig& cfg);

// Build the physics context from the configured atomic source.
phys::PhysicsContext make_context(const RunConfig& cfg);

// Subcommands: levels | lp-params | heatmap | sweetspot | route | bench.
// Writes declared files under cfg.outdir and human-readable text to `out`.
int run_subcommand(const std::string& name, const RunConfig& cfg, std::ostream& out);

// Full CLI entry point (flag parsing, config file, dispatch).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rydnet::cli
