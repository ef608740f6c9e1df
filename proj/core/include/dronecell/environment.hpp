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

#ifndef DRONECELL_ENVIRONMENT_HPP
#define DRONECELL_ENVIRONMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dronecell {

/// Urban propagation environment for the air-to-ground channel.
///
/// `a` and `b` are the sigmoid (S-curve) constants of the elevation-angle
/// line-of-sight probability fit; `eta_los_db` and `eta_nlos_db` are the
/// mean excess losses in dB added to free-space loss for the LoS and NLoS
/// propagation groups.
struct Environment {
  double a = 0.0;
  double b = 0.0;
  double eta_los_db = 0.0;
  double eta_nlos_db = 0.0;

  friend bool operator==(const Environment&, const Environment&) = default;
};

inline bool environment_valid(const Environment& env) {
  return env.a > 0.0 && env.b > 0.0 && env.eta_los_db >= 0.0 &&
         env.eta_nlos_db >= env.eta_los_db;
}

/// Built-in presets: "dense-urban", "sub-urban", "high-rise".
std::optional<Environment> environment_preset(std::string_view name);

/// Preset names in a fixed order, for help text and error messages.
const std::vector<std::string>& environment_preset_names();

}  // namespace dronecell

#endif  // DRONECELL_ENVIRONMENT_HPP
