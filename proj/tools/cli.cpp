#include "cli.hpp"

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "stbcsm/stbcsm.hpp"

namespace stbcsm::cli {
namespace {

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  int workers = 1;
  bool publication = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Master seed (overrides the config file)");
  cmd->add_option("--workers", flags.workers, "Parallel workers")->check(CLI::PositiveNumber);
  cmd->add_flag("--publication", flags.publication, "Raise stopping rule to 400 errors / 1e9 bits");
}

void apply_overrides(SimConfig& cfg, const std::vector<std::string>& overrides) {
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(ConfigError::Kind::InvalidValue, "override '" + kv + "' is not key=value");
    }
    apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides, const std::string& out_path,
            const CommonFlags& flags, std::ostream& out) {
  SimConfig cfg = load_config(config_path);
  apply_overrides(cfg, overrides);
  if (flags.seed) cfg.master_seed = *flags.seed;
  if (flags.publication) {
    cfg.min_bit_errors = std::max<std::uint64_t>(cfg.min_bit_errors, 400);
    cfg.max_bits = std::max<std::uint64_t>(cfg.max_bits, 1'000'000'000ULL);
  }
  cfg.validate();
  const auto records = run_sweep(cfg, flags.workers);
  write_csv_file(out_path, records);
  out << "wrote " << records.size() << " records to " << out_path << "\n";
  return kExitOk;
}

int cmd_figure(const std::string& name, const std::vector<std::string>& overrides, const std::string& out_dir,
               const CommonFlags& flags, std::ostream& out) {
  FigurePreset preset = figure_preset(name, flags.publication, flags.seed.value_or(1));
  for (auto& c : preset.curves) {
    apply_overrides(c, overrides);
    c.validate();
  }
  std::vector<BerRecord> all;
  for (const auto& c : preset.curves) {
    auto records = run_sweep(c, flags.workers);
    out << to_string(c.scheme) << " " << to_string(c.variant) << " L=" << c.elements << ": " << records.size()
        << " points\n";
    all.insert(all.end(), records.begin(), records.end());
  }
  std::filesystem::create_directories(out_dir);
  const std::string path = (std::filesystem::path(out_dir) / (name + ".csv")).string();
  write_csv_file(path, all);
  out << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_optimize_theta(int n_t, const std::string& modulation, double grid_step, std::optional<double> theta,
                       std::ostream& out) {
  Constellation c = [&] {
    try {
      return Constellation::parse(modulation);
    } catch (const InvalidOrderError& e) {
      throw ConfigError(ConfigError::Kind::InvalidValue, e.what());
    }
  }();
  if (n_t < 2) throw ConfigError(ConfigError::Kind::InvalidValue, "n_t must be >= 2");
  out << std::setprecision(10);
  if (theta) {
    out << "theta = " << *theta << " rad\nmin_cgd = " << min_coding_gain_distance(n_t, c, *theta) << "\n";
    return kExitOk;
  }
  const RotationSearch r = optimize_rotation_angle(n_t, c, grid_step);
  out << "theta = " << r.theta << " rad\nmin_cgd = " << r.min_cgd << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"STBC-SM / SM / V-BLAST link-level BER simulator", "stbcsm-sim"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string config_path;
  std::string out_path = "ber.csv";
  std::vector<std::string> overrides;
  auto* run = app.add_subcommand("run", "Run one sweep described by a config file");
  run->add_option("--config", config_path, "Config file (key = value lines)")->required();
  run->add_option("--out", out_path, "Output CSV path");
  run->add_option("--set", overrides, "Override a config key, key=value (repeatable)");
  add_common(run, run_flags);

  CommonFlags fig_flags;
  std::string fig_name;
  std::string out_dir = ".";
  std::vector<std::string> fig_overrides;
  auto* fig = app.add_subcommand("figure", "Run a figure preset bundle");
  fig->add_option("name", fig_name, "fig2 | fig3 | fig4 | fig5 | fig6")->required();
  fig->add_option("--out", out_dir, "Output directory");
  fig->add_option("--set", fig_overrides, "Override a key on every curve, key=value (repeatable)");
  add_common(fig, fig_flags);

  int n_t = 4;
  std::string modulation = "BPSK";
  double grid_step = 0.001;
  std::optional<double> theta;
  auto* opt = app.add_subcommand("optimize-theta", "Grid-search the STBC-SM rotation angle");
  opt->add_option("--n-t", n_t, "Transmit antennas");
  opt->add_option("--modulation", modulation, "BPSK, QPSK, 8PSK, 16QAM, ...");
  opt->add_option("--grid-step", grid_step, "Search step in radians (<= 0.01)");
  opt->add_option("--theta", theta, "Evaluate the minimum CGD at this angle instead of searching");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*run) return cmd_run(config_path, overrides, out_path, run_flags, out);
    if (*fig) return cmd_figure(fig_name, fig_overrides, out_dir, fig_flags, out);
    if (*opt) return cmd_optimize_theta(n_t, modulation, grid_step, theta, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace stbcsm::cli
