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

#ifndef DRONECELL_EXPERIMENT_HPP
#define DRONECELL_EXPERIMENT_HPP

#include <string>

#include "dronecell/metrics.hpp"

namespace dronecell {

/// Aggregates of one Monte Carlo realization.
///
/// Typical-user metrics cover only users inside the analysis disk, while
/// association loads and mean_load_by_kind come from the full deployment;
/// interferers always populate the whole outer disk.
struct TrialResult {
  std::uint64_t trial_index = 0;
  // No analysis-region user (or no node at all) to measure. Empty trials
  // are excluded from sweep averages and counted separately.
  bool empty = true;
  std::size_t analysis_user_count = 0;
  double mean_typical_se = 0.0;  // unshared SE, mean over analysis users
  double network_se = 0.0;       // shared SE, summed over analysis users
  std::array<std::size_t, kNodeKindCount> counts_by_kind{};
  std::array<double, kNodeKindCount> mean_load_by_kind{};

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// Which trial aggregate a sweep averages.
enum class Metric { kTypicalSe, kNetworkSe };

struct SweepPoint {
  double parameter = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  std::size_t trials = 0;  // non-empty trials included in the mean
  std::size_t empty_trials = 0;
  bool has_counts = false;
  std::array<double, kNodeKindCount> mean_counts{};
};

struct SweepResult {
  std::string parameter_name;
  Metric metric = Metric::kTypicalSe;
  std::vector<SweepPoint> points;
};

struct OptimumReport {
  std::size_t argmax_index = 0;
  double argmax_value = 0.0;
  double max_metric = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  // The argmax confidence interval is disjoint from the intervals at both
  // grid endpoints; false whenever the argmax is itself an endpoint.
  bool separated = false;
};

/// Runs one realization: sample, associate, switch off idle nodes, compute
/// metrics over analysis-region users. Deterministic in (spec, master_seed,
/// trial_index).
TrialResult run_trial(const DeploymentSpec& spec, std::uint64_t master_seed,
                      std::uint64_t trial_index);

/// Sweeps the small-drone proportion over `grid` (values in [0, 1]),
/// averaging `trials` realizations per point. All points share trial
/// substreams (common random numbers): users, terrestrial nodes, drone
/// positions, and fades are identical across the grid, only the tier
/// labels move.
SweepResult sweep_small_fraction(const DeploymentSpec& base,
                                 const std::vector<double>& grid,
                                 std::size_t trials,
                                 std::uint64_t master_seed,
                                 Metric metric = Metric::kTypicalSe,
                                 unsigned threads = 0);

/// Sweeps the small-drone altitude in meters; everything else as above.
SweepResult sweep_small_altitude(const DeploymentSpec& base,
                                 const std::vector<double>& grid,
                                 std::size_t trials,
                                 std::uint64_t master_seed,
                                 Metric metric = Metric::kTypicalSe,
                                 unsigned threads = 0);

/// Sweeps the user-to-BS load ratio: each point runs with
/// lambda_users = ratio * lambda_terrestrial and drones forced on or off.
/// Points carry mean per-kind association counts alongside the metric.
SweepResult sweep_load_ratio(const DeploymentSpec& base,
                             const std::vector<double>& ratios,
                             std::size_t trials, std::uint64_t master_seed,
                             bool with_drones,
                             Metric metric = Metric::kNetworkSe,
                             unsigned threads = 0);

/// Grid argmax of the sweep means, ties to the lowest index.
OptimumReport find_optimum(const SweepResult& sweep);

}  // namespace dronecell

#endif  // DRONECELL_EXPERIMENT_HPP
