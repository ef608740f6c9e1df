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

#ifndef DRONECELL_ASSOCIATION_HPP
#define DRONECELL_ASSOCIATION_HPP

#include "dronecell/deployment.hpp"

namespace dronecell {

/// User-to-node map with per-node load.
struct Association {
  std::vector<std::size_t> serving;  // per user: serving node index
  std::vector<std::size_t> load;     // per node: associated user count
};

/// Association metric: the long-term mean received power in watts from
/// `node` at `user`. Fading is deliberately excluded so terrestrial and
/// drone candidates are compared on equal (mean) terms; drone links carry
/// no small-scale fading at all. Terrestrial distance is clamped at 1 m,
/// the reference distance of the d^-alpha law.
double mean_received_power(const Point& user, const Node& node,
                           const Environment& env, const RadioConfig& radio);

/// Associates every user to the node with the strongest mean received
/// power (ties to the lowest node index), then deactivates nodes that
/// attracted no users so they stop contributing interference.
///
/// Throws ConfigError when the deployment has no nodes.
Association associate(Deployment& deployment, const Environment& env,
                      const RadioConfig& radio);

}  // namespace dronecell

#endif  // DRONECELL_ASSOCIATION_HPP
