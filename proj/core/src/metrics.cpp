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

#include "dronecell/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "dronecell/channel.hpp"

namespace dronecell {

namespace {

/// Instantaneous received power in watts, fades included on terrestrial
/// links. Drone links have no small-scale term, so instantaneous equals
/// mean there.
double instantaneous_power(const Deployment& d, std::size_t user,
                           std::size_t node_index, const Environment& env,
                           const RadioConfig& radio) {
  const Node& node = d.nodes[node_index];
  const double horizontal = distance(d.users[user], node.position);
  if (node.kind == NodeKind::kTerrestrial) {
    const double dist = std::max(horizontal, 1.0);
    return node.tx_power_w * terrestrial_gain(dist, radio.path_loss_exponent,
                                              d.fade_at(user, node_index));
  }
  return node.tx_power_w * atg_gain_linear(node.altitude_m, horizontal, env,
                                           radio);
}

}  // namespace

double compute_sinr(std::size_t user_index, const Deployment& deployment,
                    const Association& assoc, const Environment& env,
                    const RadioConfig& radio) {
  const std::size_t serving = assoc.serving.at(user_index);
  if (!deployment.nodes[serving].active) {
    throw std::logic_error("compute_sinr: serving node is inactive");
  }

  const double signal =
      instantaneous_power(deployment, user_index, serving, env, radio);

  double interference = 0.0;
  for (std::size_t n = 0; n < deployment.nodes.size(); ++n) {
    if (n == serving || !deployment.nodes[n].active) {
      continue;
    }
    interference += instantaneous_power(deployment, user_index, n, env, radio);
  }

  return signal / (radio.noise_power_w + interference);
}

NetworkMetrics compute_metrics(const Deployment& deployment,
                               const Association& assoc,
                               const Environment& env,
                               const RadioConfig& radio) {
  NetworkMetrics out;
  out.users.reserve(deployment.users.size());

  for (std::size_t u = 0; u < deployment.users.size(); ++u) {
    UserMetrics m;
    m.serving_node = assoc.serving[u];
    m.serving_kind = deployment.nodes[m.serving_node].kind;
    m.sinr = compute_sinr(u, deployment, assoc, env, radio);
    m.se = std::log2(1.0 + m.sinr);
    m.shared_se = m.se / static_cast<double>(assoc.load[m.serving_node]);
    out.network_se += m.shared_se;
    ++out.counts_by_kind[kind_index(m.serving_kind)];
    out.users.push_back(m);
  }

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

double multicast_throughput(double typical_rate, double mean_group_size) {
  if (!(typical_rate >= 0.0)) {
    throw std::invalid_argument(
        "multicast_throughput: typical_rate must be >= 0");
  }
  if (!(mean_group_size >= 0.0)) {
    throw std::invalid_argument(
        "multicast_throughput: mean_group_size must be >= 0");
  }
  return mean_group_size * typical_rate;
}

}  // namespace dronecell
