// Copyright 2026 The dronecell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dronecell/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dronecell/config.hpp"
#include "dronecell/csv.hpp"
#include "dronecell/errors.hpp"

namespace dronecell {

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::string env_name;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--config", flags->config_path,
                  "Key-value config file (defaults apply when omitted)");
  cmd->add_option("--seed", flags->seed,
                  "Master seed (overrides config and DRONECELL_SEED)");
  cmd->add_option("--trials", flags->trials,
                  "Monte Carlo trials per grid point (>= 2)");
  cmd->add_option("--out", flags->out_path, "Output CSV path");
  cmd->add_option("--env", flags->env_name,
                  "Environment preset: dense-urban, sub-urban, high-rise");
}

/// Config assembled from file, environment variable, and flags, in that
/// precedence order for the seed.
RunConfig resolve_config(const CommonFlags& flags) {
  RunConfig config;
  if (!flags.config_path.empty()) {
    config = load_config(flags.config_path);
  }

  if (const char* env_seed = std::getenv("DRONECELL_SEED")) {
    const std::string value(env_seed);
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || value[0] == '-' || end == value.c_str() ||
        *end != '\0') {
      throw ConfigError(
          "environment variable DRONECELL_SEED: expected a non-negative "
          "integer, got '" +
          value + "'");
    }
    config.master_seed = parsed;
  }
  if (flags.seed) {
    config.master_seed = *flags.seed;
  }

  if (flags.trials) {
    if (*flags.trials < 2) {
      throw ConfigError("--trials: expected a value >= 2, got " +
                        std::to_string(*flags.trials));
    }
    config.trials = *flags.trials;
  }

  if (!flags.env_name.empty()) {
    const std::optional<Environment> preset =
        environment_preset(flags.env_name);
    if (!preset) {
      std::string names;
      for (const std::string& name : environment_preset_names()) {
        if (!names.empty()) {
          names += ", ";
        }
        names += name;
      }
      throw ConfigError("--env: unknown environment '" + flags.env_name +
                        "' (presets: " + names + ")");
    }
    config.environment_name = flags.env_name;
    config.env = *preset;
  }

  if (!flags.out_path.empty()) {
    config.output_path = flags.out_path;
  }
  return config;
}

std::string out_or(const RunConfig& config, const char* fallback) {
  return config.output_path.empty() ? fallback : config.output_path;
}

/// fig4 writes one file per series: stem_drones.csv, stem_terrestrial.csv.
std::string with_suffix(const std::string& path, const char* suffix) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + suffix;
  }
  return path.substr(0, dot) + suffix + path.substr(dot);
}

std::string num(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

std::vector<double> grid_or_default(const RunConfig& config, SweepKind kind) {
  return config.grid.empty() ? default_grid(kind) : config.grid;
}

int run_fig2(const RunConfig& config) {
  DeploymentSpec spec = deployment_spec(config);
  spec.lambda_terrestrial = 0.0;  // drone-only network
  const SweepResult sweep = sweep_small_fraction(
      spec, grid_or_default(config, SweepKind::kProportion), config.trials,
      config.master_seed, Metric::kTypicalSe);
  const std::string path = out_or(config, "fig2.csv");
  emit_csv(sweep, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int run_fig3(const RunConfig& config) {
  DeploymentSpec spec = deployment_spec(config);
  spec.lambda_terrestrial = 0.0;  // drone-only network
  const SweepResult sweep = sweep_small_altitude(
      spec, grid_or_default(config, SweepKind::kAltitude), config.trials,
      config.master_seed, Metric::kTypicalSe);
  const std::string path = out_or(config, "fig3.csv");
  emit_csv(sweep, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int run_fig4(const RunConfig& config) {
  const DeploymentSpec spec = deployment_spec(config);
  const std::vector<double> ratios = grid_or_default(config, SweepKind::kLoad);
  const std::string base = out_or(config, "fig4.csv");

  const SweepResult with_drones =
      sweep_load_ratio(spec, ratios, config.trials, config.master_seed, true,
                       Metric::kNetworkSe);
  const std::string drones_path = with_suffix(base, "_drones");
  emit_csv(with_drones, drones_path);
  std::cout << "wrote " << drones_path << "\n";

  const SweepResult without_drones =
      sweep_load_ratio(spec, ratios, config.trials, config.master_seed, false,
                       Metric::kNetworkSe);
  const std::string terrestrial_path = with_suffix(base, "_terrestrial");
  emit_csv(without_drones, terrestrial_path);
  std::cout << "wrote " << terrestrial_path << "\n";
  return 0;
}

int run_optimize(const RunConfig& config) {
  const DeploymentSpec spec = deployment_spec(config);
  const std::vector<double> grid = grid_or_default(config, config.sweep);
  const Metric metric = selection_metric(config.metric);

  SweepResult sweep;
  switch (config.sweep) {
    case SweepKind::kProportion:
      sweep = sweep_small_fraction(spec, grid, config.trials,
                                   config.master_seed, metric);
      break;
    case SweepKind::kAltitude:
      sweep = sweep_small_altitude(spec, grid, config.trials,
                                   config.master_seed, metric);
      break;
    case SweepKind::kLoad:
      sweep = sweep_load_ratio(spec, grid, config.trials, config.master_seed,
                               config.drones_enabled, metric);
      break;
  }

  const OptimumReport report = find_optimum(sweep);
  std::cout << "parameter = " << sweep.parameter_name << "\n"
            << "metric = " << metric_selection_name(config.metric) << "\n"
            << "argmax_index = " << report.argmax_index << "\n"
            << "argmax = " << num(report.argmax_value) << "\n"
            << "max = " << num(report.max_metric) << "\n"
            << "ci95_low = " << num(report.ci95_low) << "\n"
            << "ci95_high = " << num(report.ci95_high) << "\n"
            << "separated = " << (report.separated ? "true" : "false")
            << "\n";

  if (!config.output_path.empty()) {
    emit_csv(sweep, config.output_path);
    std::cout << "wrote " << config.output_path << "\n";
  }
  return 0;
}

int run_trial_dump(const RunConfig& config) {
  const DeploymentSpec spec = deployment_spec(config);
  Deployment deployment = build_deployment(spec, config.master_seed, 0);
  if (deployment.nodes.empty()) {
    throw std::runtime_error(
        "trial realization has no nodes; raise the intensities or the seed");
  }
  const Association assoc = associate(deployment, spec.env, spec.radio);
  const NetworkMetrics metrics =
      compute_metrics(deployment, assoc, spec.env, spec.radio);

  const std::string path = out_or(config, "trial.csv");
  emit_csv(metrics.users, deployment.users, path);
  std::cout << "wrote " << path << " (" << metrics.users.size()
            << " users, network_se = " << num(metrics.network_se) << ")\n";
  return 0;
}

int dispatch(int argc, const char* const* argv) {
  CLI::App app{
      "Monte Carlo downlink simulator for drone-assisted cellular "
      "networks"};
  app.footer(
      "Master seed precedence: config file < DRONECELL_SEED < --seed.\n"
      "Grids and scenario parameters come from --config; see the sample "
      "config in the README.");
  app.require_subcommand(0, 1);

  CommonFlags flags;
  CLI::App* fig2 = app.add_subcommand(
      "fig2", "Typical-user SE over the small-drone proportion (drone-only)");
  CLI::App* fig3 = app.add_subcommand(
      "fig3", "Typical-user SE over the small-drone altitude (drone-only)");
  CLI::App* fig4 = app.add_subcommand(
      "fig4",
      "Network SE and association counts over the load ratio, with and "
      "without drones");
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Run the configured sweep and report the optimum");
  CLI::App* trial = app.add_subcommand(
      "trial", "Dump per-user metrics of a single realization");
  for (CLI::App* cmd : {fig2, fig3, fig4, optimize, trial}) {
    add_common_flags(cmd, &flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help();
    return 1;
  }

  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }

  const RunConfig config = resolve_config(flags);
  if (fig2->parsed()) {
    return run_fig2(config);
  }
  if (fig3->parsed()) {
    return run_fig3(config);
  }
  if (fig4->parsed()) {
    return run_fig4(config);
  }
  if (optimize->parsed()) {
    return run_optimize(config);
  }
  return run_trial_dump(config);
}

}  // namespace

int run_command(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dronecell
