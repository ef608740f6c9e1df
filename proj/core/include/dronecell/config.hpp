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

#ifndef DRONECELL_CONFIG_HPP
#define DRONECELL_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dronecell/experiment.hpp"

namespace dronecell {

/// Which sweep a generic run performs.
enum class SweepKind { kProportion, kAltitude, kLoad };

/// Which aggregate the emitted table reports. kCounts behaves like
/// kNetworkSe but exists so a config can ask for the per-kind association
/// columns explicitly; load sweeps always carry them.
enum class MetricSelection { kTypicalSe, kNetworkSe, kCounts };

const char* sweep_kind_name(SweepKind kind);
const char* metric_selection_name(MetricSelection metric);

/// Full run description: scenario, sweep, seed, and output plumbing.
///
/// Defaults reproduce the reference scenario end to end, so an empty
/// config file is a valid run.
struct RunConfig {
  std::string environment_name = "dense-urban";
  Environment env{12.08, 0.11, 1.6, 23.0};
  RadioConfig radio;

  double lambda_terrestrial = 20.0;
  double lambda_users = 120.0;
  double lambda_drones = 10.0;
  double small_fraction = 0.5;
  bool drones_enabled = true;

  double region_radius_m = 2000.0;
  // 0 means "half the region radius", resolved in deployment_spec().
  double analysis_radius_m = 0.0;

  std::size_t trials = 2000;
  std::uint64_t master_seed = 1;

  SweepKind sweep = SweepKind::kProportion;
  MetricSelection metric = MetricSelection::kTypicalSe;
  // Empty means "use the default grid for the sweep kind".
  std::vector<double> grid;
  std::string output_path;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses `key = value` lines ('#' comments, blank lines allowed; values
/// may be double-quoted). Unknown keys and out-of-range values raise
/// ConfigError naming the offender. Keys left out keep the defaults above.
///
/// `environment` accepts a preset name or "custom"; custom requires all of
/// env_a, env_b, env_eta_los_db, env_eta_nlos_db. The env_* keys may also
/// follow a preset name to override single values.
RunConfig parse_config(const std::string& text);

/// Reads the file and delegates to parse_config. Unreadable path raises
/// ConfigError with the path in the message.
RunConfig load_config(const std::string& path);

/// Renders a config as parseable text with full double precision:
/// parse_config(render_config(c)) == c for every valid c.
std::string render_config(const RunConfig& config);

/// The effective Metric a sweep averages under this selection.
Metric selection_metric(MetricSelection metric);

/// Default grid for a sweep kind: proportions 0, 0.1, ..., 1; altitudes
/// 50, 100, ..., 1000 m; load ratios 0.5, 1, 2, 4, 8, 16.
std::vector<double> default_grid(SweepKind kind);

/// Scenario part of the config, with the analysis-radius default applied.
DeploymentSpec deployment_spec(const RunConfig& config);

}  // namespace dronecell

#endif  // DRONECELL_CONFIG_HPP
