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

#ifndef DRONECELL_DEPLOYMENT_HPP
#define DRONECELL_DEPLOYMENT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dronecell/environment.hpp"
#include "dronecell/geometry.hpp"
#include "dronecell/radio.hpp"
#include "dronecell/random.hpp"

namespace dronecell {

enum class NodeKind : std::uint8_t { kTerrestrial = 0, kBigDrone, kSmallDrone };

inline constexpr std::size_t kNodeKindCount = 3;

inline constexpr std::size_t kind_index(NodeKind kind) {
  return static_cast<std::size_t>(kind);
}

const char* node_kind_name(NodeKind kind);

/// One transmitter: a terrestrial BS at ground level or a drone hovering at
/// its tier's altitude.
struct Node {
  NodeKind kind = NodeKind::kTerrestrial;
  Point position;
  double altitude_m = 0.0;   // 0 for terrestrial
  double tx_power_w = 0.0;
  bool active = true;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Intensities and switches describing one scenario to sample.
///
/// Every lambda is the expected node count on the outer disk of `region`.
/// `small_fraction` thins the drone process: each sampled drone is small
/// with this probability and big otherwise.
struct DeploymentSpec {
  double lambda_terrestrial = 20.0;
  double lambda_users = 120.0;
  double lambda_drones = 10.0;
  double small_fraction = 0.5;
  bool drones_enabled = true;
  Environment env;
  RadioConfig radio;
  Region region;

  friend bool operator==(const DeploymentSpec&, const DeploymentSpec&) =
      default;
};

/// Throws ConfigError with a description if any field is out of range.
void validate_spec(const DeploymentSpec& spec);

/// One sampled realization.
///
/// Layout invariants relied on throughout the network code:
///  - nodes[0 .. terrestrial_count) are terrestrial, drones follow;
///  - fade is a users.size() x terrestrial_count row-major matrix of
///    per-link exponential fading gains (empty when either side is empty).
struct Deployment {
  std::vector<Node> nodes;
  std::size_t terrestrial_count = 0;
  PointSet users;
  std::vector<double> fade;

  double fade_at(std::size_t user, std::size_t node) const {
    return fade[user * terrestrial_count + node];
  }

  friend bool operator==(const Deployment&, const Deployment&) = default;
};

/// Samples a full realization from the spec.
///
/// Substream usage per (master seed, trial index), in consumption order:
///   "bs"     terrestrial count + positions
///   "users"  user count + positions
///   "drones" total drone count + positions (skipped when drones are off)
///   "tier"   one uniform per drone for the small/big split
///   "fading" user-major exponential fades toward terrestrial nodes
///
/// Keeping the split on its own substream means a sweep over
/// small_fraction re-labels the same drone positions instead of moving
/// them, and leaves users, terrestrial nodes, and fades untouched.
Deployment build_deployment(const DeploymentSpec& spec,
                            std::uint64_t master_seed,
                            std::uint64_t trial_index);

}  // namespace dronecell

#endif  // DRONECELL_DEPLOYMENT_HPP
