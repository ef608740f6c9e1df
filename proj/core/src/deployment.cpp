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

#include "dronecell/deployment.hpp"

#include <string>

#include "dronecell/errors.hpp"
#include "dronecell/point_process.hpp"

namespace dronecell {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kTerrestrial:
      return "terrestrial";
    case NodeKind::kBigDrone:
      return "big-drone";
    case NodeKind::kSmallDrone:
      return "small-drone";
  }
  return "unknown";
}

void validate_spec(const DeploymentSpec& spec) {
  if (!(spec.lambda_terrestrial >= 0.0)) {
    throw ConfigError("lambda_terrestrial must be >= 0");
  }
  if (!(spec.lambda_users >= 0.0)) {
    throw ConfigError("lambda_users must be >= 0");
  }
  if (!(spec.lambda_drones >= 0.0)) {
    throw ConfigError("lambda_drones must be >= 0");
  }
  if (!(spec.small_fraction >= 0.0 && spec.small_fraction <= 1.0)) {
    throw ConfigError("small_fraction must be in [0, 1]");
  }
  if (!environment_valid(spec.env)) {
    throw ConfigError(
        "environment parameters must satisfy a > 0, b > 0, "
        "0 <= eta_los <= eta_nlos");
  }
  if (!radio_valid(spec.radio)) {
    throw ConfigError(
        "radio parameters must be positive with path_loss_exponent > 2");
  }
  if (!region_valid(spec.region)) {
    throw ConfigError(
        "region must satisfy radius > 0 and 0 < analysis_radius <= radius");
  }
}

Deployment build_deployment(const DeploymentSpec& spec,
                            std::uint64_t master_seed,
                            std::uint64_t trial_index) {
  validate_spec(spec);

  Deployment out;

  RandomStream bs_stream(master_seed, trial_index, kStreamTerrestrial);
  const PointSet bs = sample_ppp(spec.lambda_terrestrial, spec.region,
                                 bs_stream);
  out.terrestrial_count = bs.size();
  out.nodes.reserve(bs.size());
  for (const Point& p : bs) {
    out.nodes.push_back({NodeKind::kTerrestrial, p, 0.0,
                         spec.radio.tx_power_terrestrial_w, true});
  }

  RandomStream user_stream(master_seed, trial_index, kStreamUsers);
  out.users = sample_ppp(spec.lambda_users, spec.region, user_stream);

  // With drones disabled no drone/tier draws are consumed, which makes the
  // result bit-identical to lambda_drones = 0.
  if (spec.drones_enabled && spec.lambda_drones > 0.0) {
    RandomStream drone_stream(master_seed, trial_index, kStreamDrones);
    const PointSet drones = sample_ppp(spec.lambda_drones, spec.region,
                                       drone_stream);
    RandomStream tier_stream(master_seed, trial_index, kStreamTierSplit);
    for (const Point& p : drones) {
      const bool small = tier_stream.next_uniform() < spec.small_fraction;
      if (small) {
        out.nodes.push_back({NodeKind::kSmallDrone, p,
                             spec.radio.altitude_small_m,
                             spec.radio.tx_power_small_w, true});
      } else {
        out.nodes.push_back({NodeKind::kBigDrone, p,
                             spec.radio.altitude_big_m,
                             spec.radio.tx_power_big_w, true});
      }
    }
  }

  RandomStream fade_stream(master_seed, trial_index, kStreamFading);
  out.fade.reserve(out.users.size() * out.terrestrial_count);
  for (std::size_t u = 0; u < out.users.size(); ++u) {
    for (std::size_t j = 0; j < out.terrestrial_count; ++j) {
      out.fade.push_back(fade_stream.next_exponential());
    }
  }

  return out;
}

}  // namespace dronecell
