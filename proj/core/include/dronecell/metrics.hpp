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

#ifndef DRONECELL_METRICS_HPP
#define DRONECELL_METRICS_HPP

#include "dronecell/association.hpp"

namespace dronecell {

/// Per-user link quality for one realization.
struct UserMetrics {
  double sinr = 0.0;       // linear
  double se = 0.0;         // log2(1 + sinr), bits/s/Hz
  double shared_se = 0.0;  // se / load of the serving node
  NodeKind serving_kind = NodeKind::kTerrestrial;
  std::size_t serving_node = 0;
};

/// Aggregates of compute_metrics over every user in the deployment.
struct NetworkMetrics {
  std::vector<UserMetrics> users;
  double network_se = 0.0;  // sum of shared_se
  std::array<std::size_t, kNodeKindCount> counts_by_kind{};
  // Mean multicast group size: users of the kind / active nodes of the
  // kind; 0 when the kind has no active node.
  std::array<double, kNodeKindCount> mean_load_by_kind{};
};

/// Downlink SINR of one user.
///
/// Numerator: instantaneous received power from the serving node
/// (terrestrial links include the sampled fade, drone links are mean-gain
/// only). Denominator: noise power plus the instantaneous received power
/// of every ACTIVE non-serving node of any kind; nodes switched off by
/// associate() do not interfere.
double compute_sinr(std::size_t user_index, const Deployment& deployment,
                    const Association& assoc, const Environment& env,
                    const RadioConfig& radio);

/// Per-user SINR/SE plus network totals over all users in the deployment.
/// shared_se divides each user's SE by its serving node's load: one shared
/// channel handed out with equal probability.
NetworkMetrics compute_metrics(const Deployment& deployment,
                               const Association& assoc,
                               const Environment& env,
                               const RadioConfig& radio);

/// Throughput of a multicast group: every one of the mean_group_size
/// receivers decodes the typical-rate stream, so capacity scales linearly.
double multicast_throughput(double typical_rate, double mean_group_size);

}  // namespace dronecell

#endif  // DRONECELL_METRICS_HPP
