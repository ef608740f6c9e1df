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

#ifndef DRONECELL_RADIO_HPP
#define DRONECELL_RADIO_HPP

namespace dronecell {

/// Radio-layer parameters shared by all nodes.
///
/// Noise power is total power over an implicit 1 Hz channel, so every rate
/// in the simulator is per-Hz. Terrestrial links use the dimensionless
/// d^-alpha law with an implicit 1 m reference distance; drone links use
/// the frequency-dependent air-to-ground model.
struct RadioConfig {
  double carrier_frequency_hz = 2.5e9;
  double light_speed = 3.0e8;
  double path_loss_exponent = 4.0;
  double noise_power_w = 1.0e-15;
  double tx_power_terrestrial_w = 2.0;
  double tx_power_big_w = 40.0;
  double tx_power_small_w = 5.0;
  double altitude_big_m = 3000.0;
  double altitude_small_m = 150.0;

  friend bool operator==(const RadioConfig&, const RadioConfig&) = default;
};

inline bool radio_valid(const RadioConfig& r) {
  return r.carrier_frequency_hz > 0.0 && r.light_speed > 0.0 &&
         r.path_loss_exponent > 2.0 && r.noise_power_w > 0.0 &&
         r.tx_power_terrestrial_w > 0.0 && r.tx_power_big_w > 0.0 &&
         r.tx_power_small_w > 0.0 && r.altitude_big_m > 0.0 &&
         r.altitude_small_m > 0.0;
}

}  // namespace dronecell

#endif  // DRONECELL_RADIO_HPP
