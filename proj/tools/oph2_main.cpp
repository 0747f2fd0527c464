// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
//
// Command-line front end. Every subcommand emits CSV (6 significant
// digits, prefixed by a `# config:` echo line) or a single JSON document,
// to stdout or to --output PATH. Exit codes: 0 success, 2 usage error,
// 1 runtime error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oph2/oph2.hpp"

namespace {

using njson = nlohmann::ordered_json;
using oph2::detail::fmt6;
using oph2::detail::fmt_full;

struct GlobalOpts {
  std::string format = "csv";
  std::string output_path;
};

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const GlobalOpts& g, const std::string& payload) {
  if (g.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(g.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + g.output_path);
  out << payload;
}

std::string config_line(const ConfigEcho& cfg) {
  std::string line = "# config:";
  for (const auto& [k, v] : cfg) line += " " + k + "=" + v;
  line += "\n";
  return line;
}

njson config_json(const ConfigEcho& cfg) {
  njson j = njson::object();
  for (const auto& [k, v] : cfg) j[k] = v;
  return j;
}

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_theta_list(const std::string& spec) {
  std::vector<double> out;
  for (const auto tok : oph2::detail::split_char(spec, ',')) {
    double v = 0.0;
    if (!oph2::detail::parse_double(oph2::detail::trim(tok), v))
      throw UsageError("invalid theta list: " + spec);
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("theta list must be nonempty");
  return out;
}

struct TempSpec {
  std::vector<double> samples;
  std::string echo;
};

TempSpec resolve_temps(double temp_kelvin, const std::string& range_spec) {
  if (temp_kelvin > 0.0 && !range_spec.empty())
    throw UsageError("use either --temp-kelvin or --temp-range, not both");
  if (!range_spec.empty()) {
    const auto parts = oph2::detail::split_char(range_spec, ':');
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    if (parts.size() != 3 || !oph2::detail::parse_double(parts[0], lo) ||
        !oph2::detail::parse_double(parts[1], hi) || !oph2::detail::parse_int(parts[2], steps))
      throw UsageError("invalid --temp-range, expected LO:HI:STEPS");
    if (!(lo > 0.0 && hi > lo && steps >= 2))
      throw UsageError("--temp-range needs 0 < LO < HI and STEPS >= 2");
    return {oph2::linspace(lo, hi, steps), range_spec};
  }
  if (!(temp_kelvin > 0.0)) throw UsageError("--temp-kelvin must be positive");
  return {{temp_kelvin}, fmt_full(temp_kelvin)};
}

// ---------------------------------------------------------------- xi-sweep

struct XiSweepOpts {
  std::string density_path;
  std::string synthetic_spec;
  double z_min = 0.2;
  double z_max = 3.0;
  int z_steps = 29;
  std::string theta_spec = "10,70";
  double lambda_c = 1.0;
  double bond_length = oph2::default_bond_length_angstrom;
};

int run_xi_sweep(const XiSweepOpts& o, const GlobalOpts& g) {
  if (o.density_path.empty() == o.synthetic_spec.empty())
    throw UsageError("exactly one of --density or --synthetic is required");
  if (o.z_steps < 2) throw UsageError("--z-steps must be at least 2");
  if (!(o.z_min >= 0.0 && o.z_max > o.z_min)) throw UsageError("need 0 <= z-min < z-max");
  if (!(o.bond_length > 0.0)) throw UsageError("--bond-length must be positive");
  const std::vector<double> thetas = parse_theta_list(o.theta_spec);
  for (double th : thetas)
    if (!(th >= 0.0 && th <= 180.0)) throw UsageError("theta must be in [0, 180] degrees");

  oph2::SpinDensityField field = [&] {
    if (!o.density_path.empty()) return oph2::parse_cube(read_file(o.density_path));
    const auto parts = oph2::detail::split_char(o.synthetic_spec, ':');
    double amp = 0.0, r0 = 0.0;
    if (parts.size() != 3 || !oph2::detail::parse_double(parts[1], amp) ||
        !oph2::detail::parse_double(parts[2], r0))
      throw UsageError("invalid --synthetic, expected KIND:AMPLITUDE:R0");
    oph2::ProfileKind kind;
    if (parts[0] == "exponential")
      kind = oph2::ProfileKind::exponential;
    else if (parts[0] == "gaussian")
      kind = oph2::ProfileKind::gaussian;
    else
      throw UsageError("synthetic kind must be exponential or gaussian");
    if (!(r0 > 0.0)) throw UsageError("synthetic decay length must be positive");
    return oph2::synthetic_field(kind, amp, r0);
  }();

  oph2::ProbeGeometry geom;
  geom.bond_length = o.bond_length;
  oph2::HyperfineParams params;
  params.lambda_c = o.lambda_c;
  const auto curve =
      oph2::sweep(field, geom, params, oph2::linspace(o.z_min, o.z_max, o.z_steps), thetas);

  ConfigEcho cfg{{"cmd", "xi-sweep"},
                 {"source", o.density_path.empty() ? "synthetic:" + o.synthetic_spec
                                                   : "file:" + basename_of(o.density_path)},
                 {"z_min", fmt_full(o.z_min)},
                 {"z_max", fmt_full(o.z_max)},
                 {"z_steps", std::to_string(o.z_steps)},
                 {"theta", o.theta_spec},
                 {"lambda_c", fmt_full(o.lambda_c)},
                 {"bond_length", fmt_full(o.bond_length)}};

  if (g.format == "csv") {
    write_output(g, config_line(cfg) + oph2::yield_curve_csv(curve));
  } else {
    njson j;
    j["config"] = config_json(cfg);
    j["z"] = curve.z;
    j["theta_deg"] = curve.theta_deg;
    j["xi"] = curve.xi;
    j["w"] = curve.w;
    write_output(g, j.dump(2) + "\n");
  }
  return 0;
}

// --------------------------------------------------------------- alignment

struct AlignmentOpts {
  std::string table_path;
  int j = 0;
  double etot_ev = -1.0;
  bool model = false;
  double et_ev = -1.0;
  oph2::FilterParams filter;
};

int run_alignment(const AlignmentOpts& o, const GlobalOpts& g) {
  const bool table_mode = !o.table_path.empty();
  if (table_mode == o.model) throw UsageError("use exactly one of --table or --model");

  if (table_mode) {
    if (o.j < 1) throw UsageError("--j must be at least 1");
    if (o.etot_ev < 0.0) throw UsageError("--etot must be non-negative");
    const auto table = oph2::load_alignment_csv(read_file(o.table_path));
    const double a = oph2::quadrupole_alignment(table, o.j, o.etot_ev);
    const auto [lo, hi] = oph2::alignment_bounds(o.j);
    const char* cls = oph2::to_string(oph2::classify(a));
    ConfigEcho cfg{{"cmd", "alignment"},
                   {"mode", "table"},
                   {"table", basename_of(o.table_path)},
                   {"j", std::to_string(o.j)},
                   {"etot_ev", fmt_full(o.etot_ev)}};
    if (g.format == "csv") {
      std::string csv = "j,etot_ev,alignment,lower_bound,upper_bound,class\n";
      csv += std::to_string(o.j) + "," + fmt6(o.etot_ev) + "," + fmt6(a) + "," + fmt6(lo) + "," +
             fmt6(hi) + "," + cls + "\n";
      write_output(g, config_line(cfg) + csv);
    } else {
      njson j;
      j["config"] = config_json(cfg);
      j["j"] = o.j;
      j["etot_ev"] = o.etot_ev;
      j["alignment"] = a;
      j["bounds"] = {lo, hi};
      j["class"] = cls;
      write_output(g, j.dump(2) + "\n");
    }
    return 0;
  }

  if (o.et_ev < 0.0) throw UsageError("--et must be non-negative");
  oph2::validate(o.filter);
  const double a = oph2::dqf_alignment_model(o.et_ev, o.filter);
  const char* cls = oph2::to_string(oph2::classify(a));
  ConfigEcho cfg{{"cmd", "alignment"},
                 {"mode", "model"},
                 {"et_ev", fmt_full(o.et_ev)},
                 {"vmin", fmt_full(o.filter.vmin_ev)},
                 {"width", fmt_full(o.filter.width_ev)},
                 {"a_slow", fmt_full(o.filter.a_slow)},
                 {"a_fast", fmt_full(o.filter.a_fast)}};
  if (g.format == "csv") {
    std::string csv = "et_ev,alignment,class\n";
    csv += fmt6(o.et_ev) + "," + fmt6(a) + "," + cls + "\n";
    write_output(g, config_line(cfg) + csv);
  } else {
    njson j;
    j["config"] = config_json(cfg);
    j["et_ev"] = o.et_ev;
    j["alignment"] = a;
    j["class"] = cls;
    write_output(g, j.dump(2) + "\n");
  }
  return 0;
}

// ------------------------------------------------------------- equilibrium

struct EquilibriumOpts {
  double temp_kelvin = 0.0;
  std::string temp_range;
  double b_mev = oph2::default_rotational_constant_mev;
  int j_max = 20;
};

int run_equilibrium(const EquilibriumOpts& o, const GlobalOpts& g) {
  const TempSpec temps = resolve_temps(o.temp_kelvin, o.temp_range);
  oph2::RotationalModel model{o.b_mev, o.j_max};
  ConfigEcho cfg{{"cmd", "equilibrium"},
                 {"temp", temps.echo},
                 {"b_mev", fmt_full(o.b_mev)},
                 {"j_max", std::to_string(o.j_max)}};
  std::vector<std::pair<double, double>> rows;
  rows.reserve(temps.samples.size());
  for (double t : temps.samples) rows.emplace_back(t, oph2::equilibrium_ortho_fraction(model, t));
  if (g.format == "csv") {
    std::string csv = "t_kelvin,x_ortho\n";
    for (const auto& [t, x] : rows) csv += fmt6(t) + "," + fmt6(x) + "\n";
    write_output(g, config_line(cfg) + csv);
  } else {
    njson j;
    j["config"] = config_json(cfg);
    j["rows"] = njson::array();
    for (const auto& [t, x] : rows) j["rows"].push_back({{"t_kelvin", t}, {"x_ortho", x}});
    write_output(g, j.dump(2) + "\n");
  }
  return 0;
}

// ----------------------------------------------------------- heat-capacity

struct HeatCapacityOpts {
  std::string species = "normal";
  double temp_kelvin = 0.0;
  std::string temp_range;
  double b_mev = oph2::default_rotational_constant_mev;
  int j_max = 20;
};

int run_heat_capacity(const HeatCapacityOpts& o, const GlobalOpts& g) {
  oph2::Species sp;
  if (o.species == "para")
    sp = oph2::Species::para;
  else if (o.species == "ortho")
    sp = oph2::Species::ortho;
  else if (o.species == "normal")
    sp = oph2::Species::normal;
  else if (o.species == "equilibrium")
    sp = oph2::Species::equilibrium;
  else
    throw UsageError("--species must be one of para, ortho, normal, equilibrium");
  const TempSpec temps = resolve_temps(o.temp_kelvin, o.temp_range);
  oph2::RotationalModel model{o.b_mev, o.j_max};
  ConfigEcho cfg{{"cmd", "heat-capacity"},
                 {"species", o.species},
                 {"temp", temps.echo},
                 {"b_mev", fmt_full(o.b_mev)},
                 {"j_max", std::to_string(o.j_max)}};
  std::vector<std::pair<double, double>> rows;
  rows.reserve(temps.samples.size());
  for (double t : temps.samples)
    rows.emplace_back(t, oph2::rotational_heat_capacity(model, sp, t));
  if (g.format == "csv") {
    std::string csv = "t_kelvin,c_rot_kb\n";
    for (const auto& [t, c] : rows) csv += fmt6(t) + "," + fmt6(c) + "\n";
    write_output(g, config_line(cfg) + csv);
  } else {
    njson j;
    j["config"] = config_json(cfg);
    j["rows"] = njson::array();
    for (const auto& [t, c] : rows) j["rows"].push_back({{"t_kelvin", t}, {"c_rot_kb", c}});
    write_output(g, j.dump(2) + "\n");
  }
  return 0;
}

// ------------------------------------------------------------------- tank

struct TankOpts {
  double x0 = 0.75;
  double hours = 100.0;
  double dt = 0.01;
  int order = 2;
  double rate = -1.0;
  bool calibrate = false;
  double target_boiloff = 0.4;
  double at_hours = 100.0;
  double latent = oph2::default_latent_heat_kj_per_mol;
  double conversion_heat = oph2::default_conversion_heat_kj_per_mol;
  double heat_leak = 0.0;
  double catalyst_gamma = 1.0;
  double n0 = 1.0;
};

int run_tank(const TankOpts& o, const GlobalOpts& g) {
  if (!(o.x0 >= 0.0 && o.x0 <= 1.0)) throw UsageError("x0 must be in [0,1]");
  if (!(o.hours > 0.0)) throw UsageError("--hours must be positive");
  if (!(o.dt > 0.0)) throw UsageError("--dt must be positive");
  if (!(o.n0 > 0.0)) throw UsageError("--n0 must be positive");
  if ((o.rate >= 0.0) == o.calibrate)
    throw UsageError("use exactly one of --rate or --calibrate");

  oph2::TankParams params;
  params.order = o.order;
  params.latent_heat_kj_per_mol = o.latent;
  params.conversion_heat_kj_per_mol = o.conversion_heat;
  params.heat_leak_kj_per_h = o.heat_leak;
  params.catalyst_gamma = o.catalyst_gamma;
  params.rate_k = o.calibrate
                      ? oph2::calibrate_rate(o.x0, o.target_boiloff, o.at_hours, params, o.dt)
                      : o.rate;
  oph2::validate(params);

  const auto traj = oph2::simulate(oph2::TankState{o.n0, o.x0, 0.0}, params, o.hours, o.dt);

  ConfigEcho cfg{{"cmd", "tank"},
                 {"x0", fmt_full(o.x0)},
                 {"n0", fmt_full(o.n0)},
                 {"hours", fmt_full(o.hours)},
                 {"dt", fmt_full(o.dt)},
                 {"order", std::to_string(o.order)},
                 {"rate_k", fmt_full(params.rate_k)}};
  if (o.calibrate) {
    cfg.emplace_back("calibrated", "1");
    cfg.emplace_back("target_boiloff", fmt_full(o.target_boiloff));
    cfg.emplace_back("at_hours", fmt_full(o.at_hours));
  }
  cfg.emplace_back("latent", fmt_full(o.latent));
  cfg.emplace_back("conversion_heat", fmt_full(o.conversion_heat));
  cfg.emplace_back("heat_leak", fmt_full(o.heat_leak));
  cfg.emplace_back("catalyst_gamma", fmt_full(o.catalyst_gamma));

  if (g.format == "csv") {
    write_output(g, config_line(cfg) + oph2::trajectory_csv(traj));
  } else {
    njson j;
    j["config"] = config_json(cfg);
    j["rate_k"] = params.rate_k;
    j["boiloff_fraction"] = oph2::boiloff_fraction(traj);
    j["trajectory"] = njson::array();
    for (const auto& s : traj)
      j["trajectory"].push_back(
          {{"t_h", s.t_hours}, {"n_mol", s.n_mol}, {"x_ortho", s.x_ortho}});
    write_output(g, j.dump(2) + "\n");
  }
  return 0;
}

// --------------------------------------------------------------- pipeline

struct PipelineOpts {
  std::string population_path;
  std::string filter = "slow";
  double steric_ratio = 0.0;
  double base_rate = 0.0;
  double dwell = 0.0;
  oph2::FilterParams fparams;
};

int run_pipeline(const PipelineOpts& o, const GlobalOpts& g) {
  if (o.population_path.empty()) throw UsageError("--population FILE is required");
  oph2::FilterMode mode;
  if (o.filter == "slow")
    mode = oph2::FilterMode::slow;
  else if (o.filter == "fast")
    mode = oph2::FilterMode::fast;
  else if (o.filter == "none")
    mode = oph2::FilterMode::none;
  else
    throw UsageError("--filter must be slow, fast or none");
  if (!(o.steric_ratio > 0.0)) throw UsageError("--steric-ratio must be positive");
  if (!(o.base_rate > 0.0)) throw UsageError("--base-rate must be positive");
  if (!(o.dwell > 0.0)) throw UsageError("--dwell must be positive");
  oph2::validate(o.fparams);

  const auto pop = oph2::load_population_csv(read_file(o.population_path));
  const auto filtered = oph2::dqf_filter(pop, mode, o.fparams);
  const auto report = oph2::se_convert(filtered, o.steric_ratio, o.base_rate, o.dwell);
  const auto baseline = oph2::se_convert(pop, o.steric_ratio, o.base_rate, o.dwell);
  const double enh_vs_unfiltered =
      report.conversion_probability / baseline.conversion_probability;

  ConfigEcho cfg{{"cmd", "pipeline"},
                 {"population", basename_of(o.population_path)},
                 {"filter", o.filter},
                 {"steric_ratio", fmt_full(o.steric_ratio)},
                 {"base_rate", fmt_full(o.base_rate)},
                 {"dwell", fmt_full(o.dwell)},
                 {"vmin", fmt_full(o.fparams.vmin_ev)},
                 {"width", fmt_full(o.fparams.width_ev)},
                 {"a_slow", fmt_full(o.fparams.a_slow)},
                 {"a_fast", fmt_full(o.fparams.a_fast)}};

  if (g.format == "csv") {
    std::string csv =
        "input_weight,output_weight,mean_alignment,conversion_probability,"
        "enhancement_factor,enhancement_vs_unfiltered\n";
    csv += fmt6(report.input_weight) + "," + fmt6(report.output_weight) + "," +
           fmt6(report.mean_alignment) + "," + fmt6(report.conversion_probability) + "," +
           fmt6(report.enhancement_factor) + "," + fmt6(enh_vs_unfiltered) + "\n";
    write_output(g, config_line(cfg) + csv);
  } else {
    njson j;
    j["config"] = config_json(cfg);
    j["report"] = {{"input_weight", report.input_weight},
                   {"output_weight", report.output_weight},
                   {"mean_alignment", report.mean_alignment},
                   {"conversion_probability", report.conversion_probability},
                   {"enhancement_factor", report.enhancement_factor}};
    j["enhancement_vs_unfiltered"] = enh_vs_unfiltered;
    write_output(g, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ortho-para H2 conversion toolkit"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", g.output_path, "write to PATH instead of stdout");

  XiSweepOpts xo;
  auto* sub_xi = app.add_subcommand("xi-sweep", "conversion matrix element and yield over (Z, theta)");
  sub_xi->fallthrough();
  sub_xi->add_option("--density", xo.density_path, "cube-format net spin density file");
  sub_xi->add_option("--synthetic", xo.synthetic_spec, "analytic field KIND:AMPLITUDE:R0");
  sub_xi->add_option("--z-min", xo.z_min, "lowest Z sample, Angstrom");
  sub_xi->add_option("--z-max", xo.z_max, "highest Z sample, Angstrom");
  sub_xi->add_option("--z-steps", xo.z_steps, "number of Z samples");
  sub_xi->add_option("--theta", xo.theta_spec, "comma-separated theta list, degrees");
  sub_xi->add_option("--lambda-c", xo.lambda_c, "contact coupling constant");
  sub_xi->add_option("--bond-length", xo.bond_length, "H-H bond length, Angstrom");

  AlignmentOpts ao;
  auto* sub_al = app.add_subcommand("alignment", "quadrupole alignment from a table or the filter model");
  sub_al->fallthrough();
  sub_al->add_option("--table", ao.table_path, "desorption table CSV (j,mj,etot_ev,d)");
  sub_al->add_option("--j", ao.j, "rotational level");
  sub_al->add_option("--etot", ao.etot_ev, "total energy group, eV");
  sub_al->add_flag("--model", ao.model, "evaluate the filter alignment model");
  sub_al->add_option("--et", ao.et_ev, "translational energy, eV");
  sub_al->add_option("--vmin", ao.filter.vmin_ev, "filter threshold, eV");
  sub_al->add_option("--width", ao.filter.width_ev, "crossover width, eV");
  sub_al->add_option("--a-slow", ao.filter.a_slow, "slow-limit alignment");
  sub_al->add_option("--a-fast", ao.filter.a_fast, "fast-limit alignment");

  EquilibriumOpts eo;
  auto* sub_eq = app.add_subcommand("equilibrium", "equilibrium ortho fraction versus temperature");
  sub_eq->fallthrough();
  sub_eq->add_option("--temp-kelvin", eo.temp_kelvin, "single temperature, K");
  sub_eq->add_option("--temp-range", eo.temp_range, "LO:HI:STEPS temperature sweep, K");
  sub_eq->add_option("--b-mev", eo.b_mev, "rotational constant, meV");
  sub_eq->add_option("--j-max", eo.j_max, "partition sum truncation");

  HeatCapacityOpts ho;
  auto* sub_hc = app.add_subcommand("heat-capacity", "rotational heat capacity per molecule");
  sub_hc->fallthrough();
  sub_hc->add_option("--species", ho.species, "para, ortho, normal or equilibrium");
  sub_hc->add_option("--temp-kelvin", ho.temp_kelvin, "single temperature, K");
  sub_hc->add_option("--temp-range", ho.temp_range, "LO:HI:STEPS temperature sweep, K");
  sub_hc->add_option("--b-mev", ho.b_mev, "rotational constant, meV");
  sub_hc->add_option("--j-max", ho.j_max, "partition sum truncation");

  TankOpts to;
  auto* sub_tk = app.add_subcommand("tank", "liquid tank boil-off trajectory");
  sub_tk->fallthrough();
  sub_tk->add_option("--x0", to.x0, "initial ortho fraction");
  sub_tk->add_option("--hours", to.hours, "simulation horizon, h");
  sub_tk->add_option("--dt", to.dt, "integrator step, h");
  sub_tk->add_option("--order", to.order, "kinetic order, 1 or 2");
  sub_tk->add_option("--rate", to.rate, "conversion rate constant");
  sub_tk->add_flag("--calibrate", to.calibrate, "calibrate the rate to a target boil-off");
  sub_tk->add_option("--target-boiloff", to.target_boiloff, "boil-off fraction to calibrate to");
  sub_tk->add_option("--at-hours", to.at_hours, "calibration time, h");
  sub_tk->add_option("--latent", to.latent, "latent heat, kJ/mol");
  sub_tk->add_option("--conversion-heat", to.conversion_heat, "conversion heat, kJ/mol");
  sub_tk->add_option("--heat-leak", to.heat_leak, "external heat leak, kJ/h");
  sub_tk->add_option("--catalyst-gamma", to.catalyst_gamma, "catalyst rate multiplier");
  sub_tk->add_option("--n0", to.n0, "initial liquid amount, mol");

  PipelineOpts po;
  auto* sub_pl = app.add_subcommand("pipeline", "energy filter and steric conversion stage");
  sub_pl->fallthrough();
  sub_pl->add_option("--population", po.population_path, "population CSV (j,mj,et_ev,weight)");
  sub_pl->add_option("--filter", po.filter, "slow, fast or none");
  sub_pl->add_option("--steric-ratio", po.steric_ratio, "CLR over HLR rate ratio");
  sub_pl->add_option("--base-rate", po.base_rate, "HLR conversion rate, 1/h");
  sub_pl->add_option("--dwell", po.dwell, "dwell time in the stage, h");
  sub_pl->add_option("--vmin", po.fparams.vmin_ev, "filter threshold, eV");
  sub_pl->add_option("--width", po.fparams.width_ev, "crossover width, eV");
  sub_pl->add_option("--a-slow", po.fparams.a_slow, "slow-limit alignment");
  sub_pl->add_option("--a-fast", po.fparams.a_fast, "fast-limit alignment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sub_xi->parsed()) return run_xi_sweep(xo, g);
    if (sub_al->parsed()) return run_alignment(ao, g);
    if (sub_eq->parsed()) return run_equilibrium(eo, g);
    if (sub_hc->parsed()) return run_heat_capacity(ho, g);
    if (sub_tk->parsed()) return run_tank(to, g);
    if (sub_pl->parsed()) return run_pipeline(po, g);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
