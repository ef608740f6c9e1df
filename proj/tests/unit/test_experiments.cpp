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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dronecell/channel.hpp"
#include "dronecell/experiment.hpp"

namespace dronecell {
namespace {

DeploymentSpec base_spec() {
  DeploymentSpec spec;
  spec.env = {12.08, 0.11, 1.6, 23.0};
  return spec;
}

TEST_CASE("trials replay bit-identically") {
  const DeploymentSpec spec = base_spec();
  const TrialResult a = run_trial(spec, 11, 4);
  const TrialResult b = run_trial(spec, 11, 4);
  CHECK(a == b);
  CHECK(a.trial_index == 4);
  CHECK_FALSE(a.empty);
}

TEST_CASE("a userless spec yields an empty trial") {
  DeploymentSpec spec = base_spec();
  spec.lambda_users = 0.0;
  const TrialResult result = run_trial(spec, 11, 0);
  CHECK(result.empty);
  CHECK(result.analysis_user_count == 0);
  CHECK(result.mean_typical_se == 0.0);
  CHECK(result.network_se == 0.0);
}

TEST_CASE("trial aggregates respect their definitions") {
  const DeploymentSpec spec = base_spec();
  for (std::uint64_t t = 0; t < 10; ++t) {
    const TrialResult r = run_trial(spec, 3, t);
    if (r.empty) {
      continue;
    }
    CHECK(r.mean_typical_se >= 0.0);
    CHECK(r.network_se >= 0.0);
    CHECK(std::isfinite(r.mean_typical_se));
    CHECK(std::isfinite(r.network_se));
    std::size_t count = 0;
    for (std::size_t k = 0; k < kNodeKindCount; ++k) {
      count += r.counts_by_kind[k];
      CHECK(r.mean_load_by_kind[k] >= 0.0);
    }
    CHECK(count == r.analysis_user_count);
    CHECK(r.analysis_user_count > 0);
  }
}

TEST_CASE("a single-link realization matches the hand computation") {
  // Shrink the intensities until some trial realizes exactly one
  // terrestrial node and one analysis-region user, then predict that
  // trial's metrics from the closed-form link budget.
  DeploymentSpec spec = base_spec();
  spec.lambda_terrestrial = 1.0;
  spec.lambda_users = 1.0;
  spec.lambda_drones = 0.0;

  bool found = false;
  for (std::uint64_t t = 0; t < 200 && !found; ++t) {
    const Deployment d = build_deployment(spec, 99, t);
    if (d.nodes.size() != 1 || d.users.size() != 1) {
      continue;
    }
    if (norm(d.users[0]) > spec.region.analysis_radius) {
      continue;
    }
    found = true;

    const double dist =
        std::max(distance(d.users[0], d.nodes[0].position), 1.0);
    const double sinr = spec.radio.tx_power_terrestrial_w * d.fade_at(0, 0) *
                        std::pow(dist, -spec.radio.path_loss_exponent) /
                        spec.radio.noise_power_w;
    const double se = std::log2(1.0 + sinr);

    const TrialResult result = run_trial(spec, 99, t);
    CHECK_FALSE(result.empty);
    CHECK(result.analysis_user_count == 1);
    CHECK(result.mean_typical_se == doctest::Approx(se).epsilon(1e-12));
    CHECK(result.network_se == doctest::Approx(se).epsilon(1e-12));
    CHECK(result.counts_by_kind[kind_index(NodeKind::kTerrestrial)] == 1);
    CHECK(result.mean_load_by_kind[kind_index(NodeKind::kTerrestrial)] ==
          1.0);
  }
  REQUIRE(found);
}

TEST_CASE("sweep points average the underlying trials") {
  const DeploymentSpec spec = base_spec();
  const SweepResult sweep = sweep_small_fraction(spec, {0.5}, 2, 123);
  REQUIRE(sweep.points.size() == 1);

  DeploymentSpec at_half = spec;
  at_half.small_fraction = 0.5;
  const TrialResult t0 = run_trial(at_half, 123, 0);
  const TrialResult t1 = run_trial(at_half, 123, 1);
  REQUIRE_FALSE(t0.empty);
  REQUIRE_FALSE(t1.empty);

  const SweepPoint& point = sweep.points[0];
  CHECK(point.parameter == 0.5);
  CHECK(point.trials == 2);
  CHECK(point.mean == doctest::Approx((t0.mean_typical_se +
                                       t1.mean_typical_se) /
                                      2.0)
                          .epsilon(1e-12));
  CHECK(point.ci95_low == doctest::Approx(point.mean -
                                          1.96 * point.std_error)
                              .epsilon(1e-12));
  CHECK(point.ci95_high == doctest::Approx(point.mean +
                                           1.96 * point.std_error)
                               .epsilon(1e-12));
}

TEST_CASE("sweep means are independent recomputations of trial means") {
  const DeploymentSpec spec = base_spec();
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const std::size_t trials = 40;
  const SweepResult sweep = sweep_small_fraction(spec, grid, trials, 9);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    DeploymentSpec at = spec;
    at.small_fraction = grid[i];
    double sum = 0.0;
    std::size_t n = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const TrialResult r = run_trial(at, 9, t);
      if (!r.empty) {
        sum += r.mean_typical_se;
        ++n;
      }
    }
    REQUIRE(n == sweep.points[i].trials);
    CHECK(sweep.points[i].mean ==
          doctest::Approx(sum / static_cast<double>(n)).epsilon(1e-12));
  }
}

TEST_CASE("sweeps share user and node draws across grid points") {
  const DeploymentSpec spec = base_spec();
  DeploymentSpec low = spec;
  low.small_fraction = 0.0;
  DeploymentSpec high = spec;
  high.small_fraction = 1.0;
  const Deployment a = build_deployment(low, 5, 3);
  const Deployment b = build_deployment(high, 5, 3);
  REQUIRE(a.nodes.size() == b.nodes.size());
  CHECK(a.users == b.users);
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(a.nodes[i].position == b.nodes[i].position);
  }
}

TEST_CASE("the altitude sweep varies only the small-drone height") {
  const DeploymentSpec spec = base_spec();
  const SweepResult sweep = sweep_small_altitude(spec, {80.0, 300.0}, 10, 77);
  REQUIRE(sweep.points.size() == 2);
  CHECK(sweep.parameter_name == "small_altitude_m");
  CHECK(sweep.points[0].parameter == 80.0);

  DeploymentSpec at = spec;
  at.radio.altitude_small_m = 300.0;
  double sum = 0.0;
  std::size_t n = 0;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const TrialResult r = run_trial(at, 77, t);
    if (!r.empty) {
      sum += r.mean_typical_se;
      ++n;
    }
  }
  CHECK(sweep.points[1].mean ==
        doctest::Approx(sum / static_cast<double>(n)).epsilon(1e-12));
}

TEST_CASE("load sweeps scale the user intensity and pin the drone flag") {
  const DeploymentSpec spec = base_spec();
  const std::vector<double> ratios{0.5, 2.0};
  const SweepResult off = sweep_load_ratio(spec, ratios, 30, 55, false);
  CHECK(off.parameter_name == "load_ratio");
  REQUIRE(off.points.size() == 2);
  CHECK(off.points[0].has_counts);

  // Drones off must equal a zero-intensity run ratio by ratio.
  DeploymentSpec zero = spec;
  zero.lambda_drones = 0.0;
  const SweepResult zero_sweep = sweep_load_ratio(zero, ratios, 30, 55, true);
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    CHECK(off.points[i].mean == zero_sweep.points[i].mean);
    CHECK(off.points[i].std_error == zero_sweep.points[i].std_error);
    CHECK(off.points[i].mean_counts[kind_index(NodeKind::kBigDrone)] == 0.0);
    CHECK(off.points[i].mean_counts[kind_index(NodeKind::kSmallDrone)] ==
          0.0);
  }

  const SweepResult on = sweep_load_ratio(spec, ratios, 30, 55, true);
  for (const SweepPoint& point : on.points) {
    double count_sum = 0.0;
    for (std::size_t k = 0; k < kNodeKindCount; ++k) {
      count_sum += point.mean_counts[k];
    }
    CHECK(count_sum > 0.0);
  }
}

TEST_CASE("load-sweep counts conserve the analysis population") {
  const DeploymentSpec spec = base_spec();
  const std::vector<double> ratios{4.0};
  const std::size_t trials = 25;
  const SweepResult sweep = sweep_load_ratio(spec, ratios, trials, 31, true);

  DeploymentSpec at = spec;
  at.lambda_users = 4.0 * spec.lambda_terrestrial;
  at.drones_enabled = true;
  double users_sum = 0.0;
  std::size_t n = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const TrialResult r = run_trial(at, 31, t);
    if (!r.empty) {
      users_sum += static_cast<double>(r.analysis_user_count);
      ++n;
    }
  }
  const SweepPoint& point = sweep.points[0];
  double count_sum = 0.0;
  for (std::size_t k = 0; k < kNodeKindCount; ++k) {
    count_sum += point.mean_counts[k];
  }
  CHECK(count_sum ==
        doctest::Approx(users_sum / static_cast<double>(n)).epsilon(1e-12));
}

TEST_CASE("thread counts do not change sweep aggregates") {
  const DeploymentSpec spec = base_spec();
  const std::vector<double> grid{0.2, 0.8};
  const SweepResult serial = sweep_small_fraction(spec, grid, 50, 7,
                                                  Metric::kTypicalSe, 1);
  const SweepResult parallel = sweep_small_fraction(spec, grid, 50, 7,
                                                     Metric::kTypicalSe, 4);
  REQUIRE(serial.points.size() == parallel.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    CHECK(serial.points[i].mean == parallel.points[i].mean);
    CHECK(serial.points[i].std_error == parallel.points[i].std_error);
    CHECK(serial.points[i].ci95_low == parallel.points[i].ci95_low);
    CHECK(serial.points[i].ci95_high == parallel.points[i].ci95_high);
    CHECK(serial.points[i].trials == parallel.points[i].trials);
  }
}

TEST_CASE("empty trials are excluded and counted") {
  DeploymentSpec spec = base_spec();
  // About 1.25 analysis-region users expected: empties are common but not
  // universal.
  spec.lambda_users = 5.0;
  const SweepResult sweep = sweep_small_fraction(spec, {0.5}, 400, 13);
  const SweepPoint& point = sweep.points[0];
  CHECK(point.empty_trials > 0);
  CHECK(point.trials > 0);
  CHECK(point.trials + point.empty_trials == 400);
}

TEST_CASE("degenerate sweeps are rejected") {
  const DeploymentSpec spec = base_spec();
  CHECK_THROWS_AS(sweep_small_fraction(spec, {}, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_small_fraction(spec, {1.5}, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_small_fraction(spec, {0.5}, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_small_altitude(spec, {0.0}, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_load_ratio(spec, {-1.0}, 10, 1, true),
                  std::invalid_argument);

  DeploymentSpec hopeless = base_spec();
  hopeless.lambda_users = 1e-6;
  CHECK_THROWS_AS(sweep_small_fraction(hopeless, {0.5}, 5, 1),
                  std::runtime_error);
}

SweepResult synthetic_sweep(const std::vector<double>& means,
                            double std_error) {
  SweepResult sweep;
  sweep.parameter_name = "synthetic";
  for (std::size_t i = 0; i < means.size(); ++i) {
    SweepPoint point;
    point.parameter = static_cast<double>(i);
    point.mean = means[i];
    point.std_error = std_error;
    point.ci95_low = means[i] - 1.96 * std_error;
    point.ci95_high = means[i] + 1.96 * std_error;
    point.trials = 100;
    sweep.points.push_back(point);
  }
  return sweep;
}

TEST_CASE("find_optimum separates a sharp interior peak") {
  const SweepResult sweep =
      synthetic_sweep({1.0, 2.0, 5.0, 2.5, 1.5}, 0.01);
  const OptimumReport report = find_optimum(sweep);
  CHECK(report.argmax_index == 2);
  CHECK(report.argmax_value == 2.0);
  CHECK(report.max_metric == 5.0);
  CHECK(report.separated);
}

TEST_CASE("find_optimum reports overlap for a noisy interior peak") {
  const SweepResult sweep = synthetic_sweep({1.0, 1.2, 1.1}, 1.0);
  const OptimumReport report = find_optimum(sweep);
  CHECK(report.argmax_index == 1);
  CHECK_FALSE(report.separated);
}

TEST_CASE("find_optimum never separates an endpoint argmax") {
  const SweepResult rising = synthetic_sweep({1.0, 2.0, 3.0, 4.0}, 1e-6);
  const OptimumReport at_end = find_optimum(rising);
  CHECK(at_end.argmax_index == 3);
  CHECK_FALSE(at_end.separated);

  const SweepResult falling = synthetic_sweep({4.0, 3.0, 2.0}, 1e-6);
  const OptimumReport at_start = find_optimum(falling);
  CHECK(at_start.argmax_index == 0);
  CHECK_FALSE(at_start.separated);
}

TEST_CASE("find_optimum breaks flat ties toward the lowest index") {
  const SweepResult flat = synthetic_sweep({2.0, 2.0, 2.0}, 0.001);
  const OptimumReport report = find_optimum(flat);
  CHECK(report.argmax_index == 0);
  CHECK_FALSE(report.separated);
}

TEST_CASE("find_optimum rejects an empty sweep") {
  CHECK_THROWS_AS(find_optimum(SweepResult{}), std::invalid_argument);
}

}  // namespace
}  // namespace dronecell
