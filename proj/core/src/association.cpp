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

#include "dronecell/association.hpp"

#include <algorithm>

#include "dronecell/channel.hpp"
#include "dronecell/errors.hpp"

namespace dronecell {

double mean_received_power(const Point& user, const Node& node,
                           const Environment& env, const RadioConfig& radio) {
  const double horizontal = distance(user, node.position);
  if (node.kind == NodeKind::kTerrestrial) {
    const double d = std::max(horizontal, 1.0);
    return node.tx_power_w *
           terrestrial_gain(d, radio.path_loss_exponent, 1.0);
  }
  return node.tx_power_w *
         atg_gain_linear(node.altitude_m, horizontal, env, radio);
}

Association associate(Deployment& deployment, const Environment& env,
                      const RadioConfig& radio) {
  if (deployment.nodes.empty()) {
    throw ConfigError("associate: deployment has no nodes");
  }

  Association assoc;
  assoc.serving.resize(deployment.users.size());
  assoc.load.assign(deployment.nodes.size(), 0);

  for (std::size_t u = 0; u < deployment.users.size(); ++u) {
    std::size_t best = 0;
    double best_power = -1.0;
    for (std::size_t n = 0; n < deployment.nodes.size(); ++n) {
      const double p = mean_received_power(deployment.users[u],
                                           deployment.nodes[n], env, radio);
      if (p > best_power) {
        best_power = p;
        best = n;
      }
    }
    assoc.serving[u] = best;
    ++assoc.load[best];
  }

  for (std::size_t n = 0; n < deployment.nodes.size(); ++n) {
    deployment.nodes[n].active = assoc.load[n] > 0;
  }

  return assoc;
}

}  // namespace dronecell
