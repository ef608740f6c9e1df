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

#include "dronecell/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dronecell {

namespace {

double elevation_angle_deg(double altitude_m, double horizontal_m) {
  if (horizontal_m == 0.0) {
    return 90.0;
  }
  return std::atan(altitude_m / horizontal_m) * (180.0 / std::numbers::pi);
}

}  // namespace

double excess_loss_db(const Environment& env, PropagationGroup group) {
  return group == PropagationGroup::kLos ? env.eta_los_db : env.eta_nlos_db;
}

double fspl_db(double frequency_hz, double distance_m, double light_speed) {
  if (!(frequency_hz > 0.0)) {
    throw std::invalid_argument("fspl_db: frequency must be > 0");
  }
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("fspl_db: distance must be > 0");
  }
  return 20.0 * std::log10(4.0 * std::numbers::pi * frequency_hz *
                           distance_m / light_speed);
}

double los_probability(double altitude_m, double horizontal_m,
                       const Environment& env) {
  if (!(altitude_m > 0.0)) {
    throw std::invalid_argument("los_probability: altitude must be > 0");
  }
  if (!(horizontal_m >= 0.0)) {
    throw std::invalid_argument(
        "los_probability: horizontal distance must be >= 0");
  }
  const double theta_deg = elevation_angle_deg(altitude_m, horizontal_m);
  return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta_deg - env.a)));
}

double nlos_probability(double altitude_m, double horizontal_m,
                        const Environment& env) {
  return 1.0 - los_probability(altitude_m, horizontal_m, env);
}

double atg_pathloss_db(double altitude_m, double horizontal_m,
                       const Environment& env, const RadioConfig& radio) {
  const double p_los = los_probability(altitude_m, horizontal_m, env);
  const double slant =
      std::sqrt(altitude_m * altitude_m + horizontal_m * horizontal_m);
  const double a_term = env.eta_los_db - env.eta_nlos_db;
  const double b_term = 20.0 * std::log10(4.0 * std::numbers::pi *
                                          radio.carrier_frequency_hz /
                                          radio.light_speed) +
                        env.eta_nlos_db;
  return 20.0 * std::log10(slant) + a_term * p_los + b_term;
}

double atg_gain_linear(double altitude_m, double horizontal_m,
                       const Environment& env, const RadioConfig& radio) {
  return db_to_linear(-atg_pathloss_db(altitude_m, horizontal_m, env, radio));
}

double terrestrial_gain(double distance_m, double alpha, double fade) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("terrestrial_gain: distance must be > 0");
  }
  if (!(alpha > 2.0)) {
    throw std::invalid_argument("terrestrial_gain: alpha must be > 2");
  }
  if (!(fade >= 0.0)) {
    throw std::invalid_argument("terrestrial_gain: fade must be >= 0");
  }
  return fade * std::pow(distance_m, -alpha);
}

double sample_fade(RandomStream& stream) { return stream.next_exponential(); }

}  // namespace dronecell
