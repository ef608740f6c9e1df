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

#include "dronecell/experiment.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dronecell/errors.hpp"

namespace dronecell {

namespace {

constexpr double kZ95 = 1.96;

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) {
    return threads;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs `count` trials of `spec`, any execution order, results stored by
/// trial index so downstream reductions are order-independent.
std::vector<TrialResult> run_trials(const DeploymentSpec& spec,
                                    std::size_t count,
                                    std::uint64_t master_seed,
                                    unsigned threads) {
  std::vector<TrialResult> results(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads),
                                                  count == 0 ? 1 : count));
  if (workers <= 1) {
    for (std::size_t t = 0; t < count; ++t) {
      results[t] = run_trial(spec, master_seed, t);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= count) {
        return;
      }
      try {
        results[t] = run_trial(spec, master_seed, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(count);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  for (std::thread& th : pool) {
    th.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return results;
}

/// Mean / stderr / CI over non-empty trials, reduced in trial order.
SweepPoint aggregate_point(double parameter,
                           const std::vector<TrialResult>& trials,
                           Metric metric, bool with_counts) {
  SweepPoint point;
  point.parameter = parameter;
  point.has_counts = with_counts;

  std::vector<double> values;
  values.reserve(trials.size());
  std::array<double, kNodeKindCount> count_sums{};
  for (const TrialResult& trial : trials) {
    if (trial.empty) {
      ++point.empty_trials;
      continue;
    }
    values.push_back(metric == Metric::kTypicalSe ? trial.mean_typical_se
                                                  : trial.network_se);
    for (std::size_t k = 0; k < kNodeKindCount; ++k) {
      count_sums[k] += static_cast<double>(trial.counts_by_kind[k]);
    }
  }

  const std::size_t n = values.size();
  point.trials = n;
  if (n < 2) {
    throw std::runtime_error(
        "sweep point has fewer than 2 non-empty trials; increase trials or "
        "lambda_users");
  }

  double sum = 0.0;
  for (const double v : values) {
    sum += v;
  }
  point.mean = sum / static_cast<double>(n);

  double ss = 0.0;
  for (const double v : values) {
    const double d = v - point.mean;
    ss += d * d;
  }
  const double sample_var = ss / static_cast<double>(n - 1);
  point.std_error = std::sqrt(sample_var / static_cast<double>(n));
  point.ci95_low = point.mean - kZ95 * point.std_error;
  point.ci95_high = point.mean + kZ95 * point.std_error;

  for (std::size_t k = 0; k < kNodeKindCount; ++k) {
    point.mean_counts[k] = count_sums[k] / static_cast<double>(n);
  }
  return point;
}

SweepResult run_sweep(std::string parameter_name,
                      const std::vector<double>& grid,
                      const std::function<DeploymentSpec(double)>& spec_for,
                      std::size_t trials, std::uint64_t master_seed,
                      Metric metric, bool with_counts, unsigned threads) {
  if (grid.empty()) {
    throw std::invalid_argument("sweep grid must not be empty");
  }
  if (trials < 2) {
    throw std::invalid_argument("sweep needs at least 2 trials per point");
  }

  SweepResult out;
  out.parameter_name = std::move(parameter_name);
  out.metric = metric;
  out.points.reserve(grid.size());
  for (const double value : grid) {
    const DeploymentSpec spec = spec_for(value);
    const std::vector<TrialResult> results =
        run_trials(spec, trials, master_seed, threads);
    out.points.push_back(aggregate_point(value, results, metric, with_counts));
  }
  return out;
}

}  // namespace

TrialResult run_trial(const DeploymentSpec& spec, std::uint64_t master_seed,
                      std::uint64_t trial_index) {
  TrialResult out;
  out.trial_index = trial_index;

  Deployment deployment = build_deployment(spec, master_seed, trial_index);
  // A nodeless realization (possible at tiny intensities) cannot serve
  // anyone; record it as empty rather than failing the whole sweep.
  if (deployment.nodes.empty() || deployment.users.empty()) {
    return out;
  }

  const Association assoc = associate(deployment, spec.env, spec.radio);

  double se_sum = 0.0;
  double shared_sum = 0.0;
  std::size_t analysis_users = 0;
  for (std::size_t u = 0; u < deployment.users.size(); ++u) {
    if (norm(deployment.users[u]) > spec.region.analysis_radius) {
      continue;
    }
    ++analysis_users;
    const double sinr =
        compute_sinr(u, deployment, assoc, spec.env, spec.radio);
    const double se = std::log2(1.0 + sinr);
    se_sum += se;
    shared_sum += se / static_cast<double>(assoc.load[assoc.serving[u]]);
    ++out.counts_by_kind[kind_index(
        deployment.nodes[assoc.serving[u]].kind)];
  }

  out.analysis_user_count = analysis_users;
  if (analysis_users == 0) {
    return out;
  }

  out.empty = false;
  out.mean_typical_se = se_sum / static_cast<double>(analysis_users);
  out.network_se = shared_sum;

  // Group sizes for multicast use physical loads over the whole disk.
  std::array<std::size_t, kNodeKindCount> active_nodes{};
  std::array<std::size_t, kNodeKindCount> load_sums{};
  for (std::size_t n = 0; n < deployment.nodes.size(); ++n) {
    if (assoc.load[n] > 0) {
      ++active_nodes[kind_index(deployment.nodes[n].kind)];
      load_sums[kind_index(deployment.nodes[n].kind)] += assoc.load[n];
    }
  }
  for (std::size_t k = 0; k < kNodeKindCount; ++k) {
    out.mean_load_by_kind[k] =
        active_nodes[k] == 0 ? 0.0
                             : static_cast<double>(load_sums[k]) /
                                   static_cast<double>(active_nodes[k]);
  }
  return out;
}

SweepResult sweep_small_fraction(const DeploymentSpec& base,
                                 const std::vector<double>& grid,
                                 std::size_t trials,
                                 std::uint64_t master_seed, Metric metric,
                                 unsigned threads) {
  for (const double p : grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(
          "small-fraction grid values must be in [0, 1]");
    }
  }
  return run_sweep(
      "small_fraction", grid,
      [&base](double p) {
        DeploymentSpec spec = base;
        spec.small_fraction = p;
        return spec;
      },
      trials, master_seed, metric, false, threads);
}

SweepResult sweep_small_altitude(const DeploymentSpec& base,
                                 const std::vector<double>& grid,
                                 std::size_t trials,
                                 std::uint64_t master_seed, Metric metric,
                                 unsigned threads) {
  for (const double h : grid) {
    if (!(h > 0.0)) {
      throw std::invalid_argument("altitude grid values must be > 0");
    }
  }
  return run_sweep(
      "small_altitude_m", grid,
      [&base](double h) {
        DeploymentSpec spec = base;
        spec.radio.altitude_small_m = h;
        return spec;
      },
      trials, master_seed, metric, false, threads);
}

SweepResult sweep_load_ratio(const DeploymentSpec& base,
                             const std::vector<double>& ratios,
                             std::size_t trials, std::uint64_t master_seed,
                             bool with_drones, Metric metric,
                             unsigned threads) {
  for (const double r : ratios) {
    if (!(r >= 0.0)) {
      throw std::invalid_argument("load ratio grid values must be >= 0");
    }
  }
  return run_sweep(
      "load_ratio", ratios,
      [&base, with_drones](double ratio) {
        DeploymentSpec spec = base;
        spec.lambda_users = ratio * base.lambda_terrestrial;
        spec.drones_enabled = with_drones;
        return spec;
      },
      trials, master_seed, metric, true, threads);
}

OptimumReport find_optimum(const SweepResult& sweep) {
  if (sweep.points.empty()) {
    throw std::invalid_argument("find_optimum: sweep has no points");
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < sweep.points.size(); ++i) {
    if (sweep.points[i].mean > sweep.points[best].mean) {
      best = i;
    }
  }

  const auto disjoint = [](const SweepPoint& a, const SweepPoint& b) {
    return a.ci95_high < b.ci95_low || b.ci95_high < a.ci95_low;
  };

  const SweepPoint& arg = sweep.points[best];
  OptimumReport report;
  report.argmax_index = best;
  report.argmax_value = arg.parameter;
  report.max_metric = arg.mean;
  report.ci95_low = arg.ci95_low;
  report.ci95_high = arg.ci95_high;
  report.separated = disjoint(arg, sweep.points.front()) &&
                     disjoint(arg, sweep.points.back());
  return report;
}

}  // namespace dronecell
