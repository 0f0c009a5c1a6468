#include "rydnet/config.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rydnet/analysis.hpp"
#include "rydnet/bench.hpp"
#include "rydnet/csv.hpp"
#include "rydnet/graph.hpp"
#include "rydnet/svg.hpp"

namespace fs = std::filesystem;

namespace rydnet::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& context, const std::string& what,
                            const std::string& value) {
  throw ConfigError(context + ": expected " + what + ", got '" + value + "'");
}

double to_double(const std::string& v, const std::string& context) {
  if (v == "inf" || v == "+inf" || v == "infinity")
    return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    bad_value(context, "a number", v);
  }
  if (used != v.size()) bad_value(context, "a number", v);
  return d;
}

long to_long(const std::string& v, const std::string& context) {
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(v, &used);
  } catch (const std::exception&) {
    bad_value(context, "an integer", v);
  }
  if (used != v.size()) bad_value(context, "an integer", v);
  return n;
}

int to_int(const std::string& v, const std::string& context) {
  return static_cast<int>(to_long(v, context));
}

std::uint64_t to_u64(const std::string& v, const std::string& context) {
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(v, &used);
  } catch (const std::exception&) {
    bad_value(context, "an unsigned integer", v);
  }
  if (used != v.size()) bad_value(context, "an unsigned integer", v);
  return n;
}

bool to_bool(const std::string& v, const std::string& context) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(context, "a boolean", v);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(v);
  while (std::getline(is, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

std::vector<double> to_double_list(const std::string& v, const std::string& context) {
  std::vector<double> out;
  for (const std::string& p : split_list(v)) out.push_back(to_double(p, context));
  if (out.empty()) bad_value(context, "a comma-separated list of numbers", v);
  return out;
}

std::vector<int> to_int_list(const std::string& v, const std::string& context) {
  std::vector<int> out;
  for (const std::string& p : split_list(v)) out.push_back(to_int(p, context));
  if (out.empty()) bad_value(context, "a comma-separated list of integers", v);
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream o(path, std::ios::binary);
  o << content;
  if (!o) throw std::runtime_error("cannot write " + path.string());
}

// Filesystem-safe radius tag: 1.4142 -> "1p41421".
std::string radius_tag(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r);
  std::string s = buf;
  for (char& c : s)
    if (c == '.') c = 'p';
  return s;
}

bench::Family family_of(const std::string& name) {
  if (name == "qft") return bench::Family::kQft;
  if (name == "qpe") return bench::Family::kQpe;
  if (name == "adder") return bench::Family::kAdder;
  throw ConfigError("unknown benchmark family '" + name + "' (qft, qpe, adder)");
}

router::LevelStrategy strategy_of(const RunConfig& cfg) {
  if (cfg.strategy == "graded") return router::LevelStrategy::graded();
  if (cfg.strategy == "fixed") return router::LevelStrategy::fixed();
  throw ConfigError("unknown strategy '" + cfg.strategy + "' (graded, fixed)");
}

int site_checked(const router::LatticeSpec& lat, int x, int y, const std::string& which) {
  if (!lat.in_bounds(x, y))
    throw ConfigError(which + " (" + std::to_string(x) + "," + std::to_string(y) +
                      ") lies outside the " + std::to_string(lat.width) + "x" +
                      std::to_string(lat.height) + " lattice");
  return lat.index(x, y);
}

router::LatticeSpec bench_lattice(const RunConfig& cfg, int nq) {
  if (!cfg.bench_compact_lattice) return cfg.lattice;
  int w = 1;
  while (w * w < nq) ++w;
  const int h = (nq + w - 1) / w;
  return router::LatticeSpec{w, h, cfg.lattice.spacing_um};
}

std::vector<double> sweetspot_taus(const RunConfig& cfg) {
  if (!cfg.tau_scat_list_us.empty()) return cfg.tau_scat_list_us;
  return analysis::log_grid(20.0, 1e5, 8);
}

int cmd_levels(const RunConfig& cfg, const phys::PhysicsContext& ctx, std::ostream& out) {
  std::ostringstream csv;
  csv << "n,c6_rad_us_um6,alpha_rad_us_per_Vcm2,r_b_um,r_max_um,delta_rad_us,p11_loss\n";
  std::vector<int> ns;
  if (ctx.model().is_table())
    for (const phys::RydbergLevel& lvl : ctx.model().table()) ns.push_back(lvl.n);
  else
    for (int n = 50; n <= 110; ++n) ns.push_back(n);
  for (int n : ns) {
    const double c6 = ctx.model().c6_of(n);
    const double alpha = ctx.model().polarizability_of(n);
    const phys::LPChannel ch = ctx.channel_for(n);
    csv << n << ',' << fmt_g(c6) << ',' << fmt_g(alpha) << ','
        << fmt_g(phys::blockade_radius(c6, ctx.drive().omega)) << ',' << fmt_g(ctx.max_radius(n))
        << ',' << fmt_g(ctx.stark_shift(n)) << ',' << fmt_g(1.0 - ch.p11) << '\n';
  }
  write_file(fs::path(cfg.outdir) / "levels.csv", csv.str());
  out << csv.str();
  return 0;
}

int cmd_lp_params(const RunConfig& cfg, const phys::PhysicsContext& ctx, std::ostream& out) {
  const phys::LPGateParams& p = ctx.gate_params();
  std::ostringstream csv;
  csv << "omega_rad_us,delta_rad_us,tau_us,xi_rad,phi_rad,gate_time_us,p_scat\n";
  csv << fmt_g(ctx.drive().omega) << ',' << fmt_g(p.delta) << ',' << fmt_g(p.tau) << ','
      << fmt_g(p.xi) << ',' << fmt_g(p.phi) << ',' << fmt_g(ctx.gate_time()) << ','
      << fmt_g(ctx.p_scat()) << '\n';
  write_file(fs::path(cfg.outdir) / "lp_params.csv", csv.str());
  out << csv.str();
  return 0;
}

int cmd_heatmap(const RunConfig& cfg, const phys::PhysicsContext& ctx, std::ostream& out) {
  const int src = site_checked(cfg.lattice, cfg.from_x, cfg.from_y, "source");
  const int dst = site_checked(cfg.lattice, cfg.to_x, cfg.to_y, "target");
  for (double r : cfg.r_max_over_a) {
    const router::InteractionGraph g =
        router::build_graph(ctx, cfg.lattice, r * cfg.lattice.spacing_um, strategy_of(cfg));
    const std::vector<double> grid = router::loss_heatmap(g, src);
    std::ostringstream csv;
    csv << "x,y,p_loss\n";
    for (int i = 0; i < cfg.lattice.sites(); ++i)
      csv << cfg.lattice.x_of(i) << ',' << cfg.lattice.y_of(i) << ',' << fmt_g(grid[i]) << '\n';
    const std::string tag = radius_tag(r);
    write_file(fs::path(cfg.outdir) / ("heatmap_r" + tag + ".csv"), csv.str());
    std::ostringstream title;
    title << "overall loss from (" << cfg.from_x << "," << cfg.from_y << "), r_max = " << r
          << "a, " << cfg.strategy;
    write_file(fs::path(cfg.outdir) / ("heatmap_r" + tag + ".svg"),
               heatmap_svg(grid, cfg.lattice, title.str()));
    out << "r_max=" << fmt_g(r) << "a: p_loss to (" << cfg.to_x << "," << cfg.to_y
        << ") = " << fmt_g(grid[dst]) << "\n";
  }
  return 0;
}

int cmd_route(const RunConfig& cfg, const phys::PhysicsContext& ctx, std::ostream& out) {
  const int src = site_checked(cfg.lattice, cfg.from_x, cfg.from_y, "source");
  const int dst = site_checked(cfg.lattice, cfg.to_x, cfg.to_y, "target");
  if (src == dst) throw ConfigError("route endpoints coincide");
  std::ostringstream csv;
  csv << "r_max_over_a,strategy,swaps,hops,cz_n,cz_r_um,total_weight,p_loss_overall\n";
  for (double r : cfg.r_max_over_a) {
    const router::InteractionGraph g =
        router::build_graph(ctx, cfg.lattice, r * cfg.lattice.spacing_um, strategy_of(cfg));
    write_file(fs::path(cfg.outdir) / ("graph_r" + radius_tag(r) + ".json"),
               router::graph_to_json(g));
    const router::SynthesisPlan plan = router::synthesize_cz(g, src, dst);
    out << "r_max=" << fmt_g(r) << "a (" << cfg.strategy << "): route";
    for (int site : plan.route)
      out << " (" << cfg.lattice.x_of(site) << "," << cfg.lattice.y_of(site) << ")";
    out << "\n";
    for (const router::PlanStep& s : plan.swaps)
      out << "  swap (" << cfg.lattice.x_of(s.from) << "," << cfg.lattice.y_of(s.from) << ")-("
          << cfg.lattice.x_of(s.to) << "," << cfg.lattice.y_of(s.to) << ") r=" << fmt_g(s.r_um)
          << "um n=" << s.n << " p_swap=" << fmt_g(s.p_swap) << "\n";
    out << "  gate (" << cfg.lattice.x_of(plan.cz_from) << "," << cfg.lattice.y_of(plan.cz_from)
        << ")-(" << cfg.lattice.x_of(plan.cz_to) << "," << cfg.lattice.y_of(plan.cz_to)
        << ") r=" << fmt_g(plan.cz_r_um) << "um n=" << plan.cz_n
        << " p_loss=" << fmt_g(plan.cz_loss) << "\n";
    out << "  hops=" << plan.hop_count << " total_weight=" << fmt_g(plan.total_weight)
        << " p_loss_overall=" << fmt_g(plan.p_loss_overall) << "\n";
    csv << fmt_g(r) << ',' << cfg.strategy << ',' << plan.swaps.size() << ',' << plan.hop_count
        << ',' << plan.cz_n << ',' << fmt_g(plan.cz_r_um) << ',' << fmt_g(plan.total_weight)
        << ',' << fmt_g(plan.p_loss_overall) << '\n';
  }
  write_file(fs::path(cfg.outdir) / "route.csv", csv.str());
  return 0;
}

int cmd_sweetspot(const RunConfig& cfg, const phys::PhysicsContext& ctx, std::ostream& out) {
  if (cfg.hops < 1.0) throw ConfigError("sweetspot.hops must be >= 1");
  if (cfg.grid_points < 2) throw ConfigError("sweetspot.grid_points must be >= 2");
  double r_hi = 1.5 * cfg.hops * (1.0 - 1e-9);  // keep the gate-count exponent positive
  if (ctx.model().is_table())
    r_hi = std::min(r_hi, analysis::max_supported_radius(ctx, cfg.lattice.spacing_um));
  if (r_hi <= 1.0)
    throw ConfigError("no level supports radii beyond the lattice spacing; sweep is empty");
  const std::vector<double> grid = analysis::log_grid(1.0, r_hi, cfg.grid_points);
  const std::vector<double> taus = sweetspot_taus(cfg);
  const analysis::ScatteringSweep sweep =
      analysis::sweep_scattering_times(ctx, cfg.lattice.spacing_um, cfg.hops, grid, taus);

  std::ostringstream locus;
  locus << "tau_scat_us,p_scat,r_star,loss_star\n";
  for (std::size_t i = 0; i < sweep.curves.size(); ++i) {
    std::ostringstream csv;
    csv << "r_over_a,p_overall\n";
    for (std::size_t j = 0; j < grid.size(); ++j)
      csv << fmt_g(sweep.curves[i].r_grid[j]) << ',' << fmt_g(sweep.curves[i].p_overall[j])
          << '\n';
    write_file(fs::path(cfg.outdir) / ("sweetspot_curve_" + std::to_string(i) + ".csv"),
               csv.str());
    locus << fmt_g(sweep.curves[i].tau_scat_us) << ',' << fmt_g(sweep.curves[i].p_scat) << ','
          << fmt_g(sweep.optima[i].r_star) << ',' << fmt_g(sweep.optima[i].loss_star) << '\n';
    out << "tau_scat=" << fmt_g(sweep.curves[i].tau_scat_us) << "us p_scat="
        << fmt_g(sweep.curves[i].p_scat) << " r*=" << fmt_g(sweep.optima[i].r_star)
        << " loss*=" << fmt_g(sweep.optima[i].loss_star) << "\n";
  }
  write_file(fs::path(cfg.outdir) / "sweetspot_locus.csv", locus.str());
  write_file(fs::path(cfg.outdir) / "sweetspot.svg", sweetspot_svg(sweep));
  return 0;
}

int cmd_bench(const RunConfig& cfg, const phys::PhysicsContext& ctx, std::ostream& out) {
  if (cfg.shots < 1) throw ConfigError("bench.shots must be >= 1");
  if (cfg.inputs < 1) throw ConfigError("bench.inputs must be >= 1");
  std::ostringstream csv;
  csv << "family,width,r_max_over_a,strategy,tau_scat_us,p_success,ci_low,ci_high,survival,"
         "cz_pre,cz_post\n";
  std::ostringstream shot_log;

  for (std::size_t fi = 0; fi < cfg.families.size(); ++fi) {
    const bench::Family fam = family_of(cfg.families[fi]);
    const std::vector<int>& widths = fam == bench::Family::kQft    ? cfg.qft_widths
                                     : fam == bench::Family::kQpe ? cfg.qpe_widths
                                                                  : cfg.adder_widths;
    for (int width : widths) {
      const std::uint64_t base = (std::uint64_t(fi + 1) << 40) ^ (std::uint64_t(width) << 24);
      std::vector<bench::BenchInstance> instances;
      std::vector<bench::Circuit> reduced;
      for (int ii = 0; ii < cfg.inputs; ++ii) {
        Rng input_rng({cfg.seed, base + std::uint64_t(ii)});
        instances.push_back(bench::make_instance(fam, width, input_rng));
        reduced.push_back(bench::basis_reduce(instances.back().circuit));
      }
      const router::LatticeSpec lat = bench_lattice(cfg, width);
      for (std::size_t ri = 0; ri < cfg.r_max_over_a.size(); ++ri) {
        const double r = cfg.r_max_over_a[ri];
        const router::InteractionGraph g =
            router::build_graph(ctx, lat, r * lat.spacing_um, strategy_of(cfg));
        long correct = 0, survived = 0;
        long cz_pre = 0, cz_post = 0;
        for (int ii = 0; ii < cfg.inputs; ++ii) {
          const bench::CompiledCircuit compiled = bench::map_and_route(reduced[ii], g, ctx);
          std::vector<sim::ShotOutcome> outcomes;
          const RngSpec shot_rng{cfg.seed,
                                      base + (std::uint64_t(1) << 20) +
                                          std::uint64_t(ri) * 4096 + std::uint64_t(ii) + 1024};
          const bench::BenchmarkResult cell =
              bench::success_probability(instances[ii], compiled, ctx, shot_rng, cfg.shots,
                                         cfg.shot_log ? &outcomes : nullptr);
          correct += cell.correct;
          survived += std::lround(cell.survival * double(cfg.shots));
          cz_pre = cell.cz_pre;
          cz_post = cell.cz_post;
          for (std::size_t k = 0; k < outcomes.size(); ++k) {
            nlohmann::json line = {{"shot", k},
                                   {"survived", outcomes[k].survived},
                                   {"lost_at_gate", outcomes[k].lost_at_gate},
                                   {"outcome_bits", outcomes[k].bits}};
            shot_log << line.dump() << '\n';
          }
        }
        const long trials = long(cfg.inputs) * cfg.shots;
        double lo = 0.0, hi = 0.0;
        bench::wilson_ci(correct, trials, &lo, &hi);
        csv << cfg.families[fi] << ',' << width << ',' << fmt_g(r) << ',' << cfg.strategy << ','
            << fmt_g(cfg.noise.tau_scat_us) << ',' << fmt_g(double(correct) / double(trials))
            << ',' << fmt_g(lo) << ',' << fmt_g(hi) << ','
            << fmt_g(double(survived) / double(trials)) << ',' << cz_pre << ',' << cz_post
            << '\n';
        out << cfg.families[fi] << "-" << width << " r_max=" << fmt_g(r) << "a: p_success="
            << fmt_g(double(correct) / double(trials)) << " [" << fmt_g(lo) << ", " << fmt_g(hi)
            << "] survival=" << fmt_g(double(survived) / double(trials)) << " cz " << cz_pre
            << "->" << cz_post << "\n";
      }
    }
  }
  write_file(fs::path(cfg.outdir) / "bench.csv", csv.str());
  if (cfg.shot_log) write_file(fs::path(cfg.outdir) / "bench_shots.jsonl", shot_log.str());
  return 0;
}

}  // namespace

RunConfig default_config() { return RunConfig{}; }

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value,
               const std::string& context) {
  if (key == "atoms.table_path") {
    cfg.table_path = value;
  } else if (key == "atoms.use_power_law") {
    cfg.use_power_law = to_bool(value, context);
  } else if (key == "atoms.n_ref") {
    cfg.power_law.n_ref = to_int(value, context);
  } else if (key == "atoms.c6_ref") {
    cfg.power_law.c6_ref = to_double(value, context);
  } else if (key == "atoms.alpha_ref") {
    cfg.power_law.alpha_ref = to_double(value, context);
  } else if (key == "atoms.c6_exponent") {
    cfg.power_law.c6_exponent = to_double(value, context);
  } else if (key == "atoms.alpha_exponent") {
    cfg.power_law.alpha_exponent = to_double(value, context);
  } else if (key == "drive.omega") {
    cfg.omega = to_double(value, context);
    if (!(cfg.omega > 0.0)) bad_value(context, "a positive Rabi frequency", value);
  } else if (key == "noise.e_field") {
    cfg.noise.e_field = to_double(value, context);
    if (cfg.noise.e_field < 0.0) bad_value(context, "a nonnegative field", value);
  } else if (key == "noise.tau_scat_us") {
    cfg.noise.tau_scat_us = to_double(value, context);
    if (!(cfg.noise.tau_scat_us > 0.0)) bad_value(context, "a positive time (or inf)", value);
  } else if (key == "noise.k_margin") {
    cfg.noise.k_margin = to_double(value, context);
    if (!(cfg.noise.k_margin > 1.0)) bad_value(context, "a margin > 1", value);
  } else if (key == "noise.delta_mode") {
    if (value == "deterministic")
      cfg.noise.delta_mode = phys::DeltaMode::kDeterministic;
    else if (value == "gaussian")
      cfg.noise.delta_mode = phys::DeltaMode::kGaussian;
    else
      bad_value(context, "deterministic or gaussian", value);
  } else if (key == "noise.sigma_e") {
    cfg.noise.sigma_e = to_double(value, context);
    if (cfg.noise.sigma_e < 0.0) bad_value(context, "a nonnegative field scale", value);
  } else if (key == "lattice.width") {
    cfg.lattice.width = to_int(value, context);
  } else if (key == "lattice.height") {
    cfg.lattice.height = to_int(value, context);
  } else if (key == "lattice.spacing_um") {
    cfg.lattice.spacing_um = to_double(value, context);
    if (!(cfg.lattice.spacing_um > 0.0)) bad_value(context, "a positive spacing", value);
  } else if (key == "route.r_max_over_a") {
    cfg.r_max_over_a = to_double_list(value, context);
    for (double r : cfg.r_max_over_a)
      if (!(r > 0.0)) bad_value(context, "positive radii", value);
  } else if (key == "route.strategy") {
    if (value != "graded" && value != "fixed") bad_value(context, "graded or fixed", value);
    cfg.strategy = value;
  } else if (key == "route.from_x") {
    cfg.from_x = to_int(value, context);
  } else if (key == "route.from_y") {
    cfg.from_y = to_int(value, context);
  } else if (key == "route.to_x") {
    cfg.to_x = to_int(value, context);
  } else if (key == "route.to_y") {
    cfg.to_y = to_int(value, context);
  } else if (key == "sweetspot.hops") {
    cfg.hops = to_double(value, context);
    if (!(cfg.hops >= 1.0)) bad_value(context, "a hop count >= 1", value);
  } else if (key == "sweetspot.grid_points") {
    cfg.grid_points = to_int(value, context);
  } else if (key == "sweetspot.tau_scat_list_us") {
    cfg.tau_scat_list_us = to_double_list(value, context);
    for (double t : cfg.tau_scat_list_us)
      if (!(t > 0.0)) bad_value(context, "positive scattering times", value);
  } else if (key == "bench.families") {
    cfg.families = split_list(value);
    if (cfg.families.empty()) bad_value(context, "a family list", value);
    for (const std::string& f : cfg.families) family_of(f);  // validates
  } else if (key == "bench.qft_widths") {
    cfg.qft_widths = to_int_list(value, context);
  } else if (key == "bench.qpe_widths") {
    cfg.qpe_widths = to_int_list(value, context);
  } else if (key == "bench.adder_widths") {
    cfg.adder_widths = to_int_list(value, context);
  } else if (key == "bench.shots") {
    cfg.shots = to_long(value, context);
  } else if (key == "bench.inputs") {
    cfg.inputs = to_int(value, context);
  } else if (key == "bench.compact_lattice") {
    cfg.bench_compact_lattice = to_bool(value, context);
  } else if (key == "bench.shot_log") {
    cfg.shot_log = to_bool(value, context);
  } else if (key == "seed" || key == "run.seed") {
    cfg.seed = to_u64(value, context);
  } else if (key == "outdir" || key == "run.outdir") {
    cfg.outdir = value;
  } else {
    throw ConfigError(context + ": unknown key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg = default_config();
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string context = path + ":" + std::to_string(lineno);
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(context + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw ConfigError(context + ": empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(context + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(context + ": missing key");
    const std::string full = section.empty() ? key : section + "." + key;
    apply_key(cfg, full, trim(line.substr(eq + 1)), context);
  }
  return cfg;
}

void apply_env(RunConfig& cfg) {
  if (const char* p = std::getenv("RYDNET_DATA")) cfg.table_path = p;
}

phys::PhysicsContext make_context(const RunConfig& cfg) {
  phys::AtomicModel model = cfg.use_power_law ? phys::AtomicModel::power_law(cfg.power_law)
                                              : phys::AtomicModel::from_csv(cfg.table_path);
  return phys::PhysicsContext(std::move(model), phys::GateDrive{cfg.omega}, cfg.noise);
}

int run_subcommand(const std::string& name, const RunConfig& cfg, std::ostream& out) {
  if (cfg.r_max_over_a.empty()) throw ConfigError("route.r_max_over_a must not be empty");
  fs::create_directories(cfg.outdir);
  const phys::PhysicsContext ctx = make_context(cfg);
  if (name == "levels") return cmd_levels(cfg, ctx, out);
  if (name == "lp-params") return cmd_lp_params(cfg, ctx, out);
  if (name == "heatmap") return cmd_heatmap(cfg, ctx, out);
  if (name == "route") return cmd_route(cfg, ctx, out);
  if (name == "sweetspot") return cmd_sweetspot(cfg, ctx, out);
  if (name == "bench") return cmd_bench(cfg, ctx, out);
  throw ConfigError("unknown subcommand '" + name + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"interaction-range noise modeling for neutral-atom lattices"};
  app.name("rydnet");
  std::string config_path, table, strategy, outdir;
  std::vector<std::string> sets;
  double omega = 0.0, e_field = 0.0, tau_scat = 0.0, k_margin = 0.0;
  long shots = 0;
  std::uint64_t seed = 0;

  app.add_option("--config", config_path, "config file (key = value lines with [sections])");
  app.add_option("--set", sets, "override a config key, e.g. --set noise.e_field=0.02");
  auto* o_omega = app.add_option("--omega", omega, "drive Rabi frequency (rad/us)");
  auto* o_e = app.add_option("--e-field", e_field, "background field (V/cm)");
  auto* o_tau = app.add_option("--tau-scat", tau_scat, "scattering time (us; inf disables)");
  auto* o_k = app.add_option("--k-margin", k_margin, "blockade margin factor (> 1)");
  auto* o_table = app.add_option("--table", table, "atomic data CSV path");
  auto* o_strategy =
      app.add_option("--strategy", strategy, "level strategy: graded | fixed");
  auto* o_shots = app.add_option("--shots", shots, "shots per benchmark input");
  auto* o_seed = app.add_option("--seed", seed, "RNG seed");
  auto* o_outdir = app.add_option("--outdir", outdir, "output directory");

  app.add_subcommand("levels", "print the level table with ranges and losses");
  app.add_subcommand("lp-params", "print the solved controlled-phase pulse parameters");
  app.add_subcommand("heatmap", "single-source synthesized-gate loss maps per r_max");
  app.add_subcommand("sweetspot", "loss-vs-radius curves over scattering times");
  app.add_subcommand("route", "print the cheapest synthesis plan between two sites");
  app.add_subcommand("bench", "benchmark circuit success probabilities");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    RunConfig cfg = config_path.empty() ? default_config() : parse_config_file(config_path);
    apply_env(cfg);
    for (const std::string& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw ConfigError("flag --set " + kv + ": expected key=value");
      apply_key(cfg, trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)), "flag --set " + kv);
    }
    if (*o_omega) apply_key(cfg, "drive.omega", fmt_g(omega), "flag --omega");
    if (*o_e) apply_key(cfg, "noise.e_field", fmt_g(e_field), "flag --e-field");
    if (*o_tau) apply_key(cfg, "noise.tau_scat_us", fmt_g(tau_scat), "flag --tau-scat");
    if (*o_k) apply_key(cfg, "noise.k_margin", fmt_g(k_margin), "flag --k-margin");
    if (*o_table) cfg.table_path = table;
    if (*o_strategy) apply_key(cfg, "route.strategy", strategy, "flag --strategy");
    if (*o_shots) cfg.shots = shots;
    if (*o_seed) cfg.seed = seed;
    if (*o_outdir) cfg.outdir = outdir;
    for (const CLI::App* sub : app.get_subcommands()) return run_subcommand(sub->get_name(), cfg, out);
    throw ConfigError("missing subcommand");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rydnet::cli
