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

#ifndef DRONECELL_CHANNEL_HPP
#define DRONECELL_CHANNEL_HPP

#include "dronecell/environment.hpp"
#include "dronecell/radio.hpp"
#include "dronecell/random.hpp"

namespace dronecell {

/// Air-to-ground propagation group. Deep-fading reception (consecutive
/// reflections and diffractions) contributes a few percent at most and is
/// not modeled.
enum class PropagationGroup { kLos, kNlos };

/// Mean excess loss in dB beyond free space for a propagation group.
double excess_loss_db(const Environment& env, PropagationGroup group);

/// Free-space path loss, 20 log10(4 pi f d / c), in dB.
///
/// Throws std::invalid_argument unless frequency and distance are > 0;
/// callers with geometry that can degenerate to d = 0 clamp before calling.
double fspl_db(double frequency_hz, double distance_m,
               double light_speed = 3.0e8);

/// Line-of-sight probability for a ground user at horizontal distance
/// `horizontal_m` from a platform at height `altitude_m`:
///
///   P_LOS = 1 / (1 + a * exp(-b * (theta - a)))
///
/// where theta = arctan(altitude / horizontal) is the elevation angle in
/// degrees. The S-curve constants expect degrees; feeding radians flattens
/// the curve into uselessness. A user directly underneath (horizontal = 0)
/// is treated as elevation 90.
double los_probability(double altitude_m, double horizontal_m,
                       const Environment& env);

/// Complement of los_probability.
double nlos_probability(double altitude_m, double horizontal_m,
                        const Environment& env);

/// Mean air-to-ground path loss in dB:
///
///   L = 20 log10(sqrt(h^2 + r^2)) + A * P_LOS + B
///   A = eta_los - eta_nlos
///   B = 20 log10(4 pi f / c) + eta_nlos
///
/// which is exactly the LoS/NLoS mixture of free-space loss plus the mean
/// excess loss of each group.
double atg_pathloss_db(double altitude_m, double horizontal_m,
                       const Environment& env, const RadioConfig& radio);

/// Linear power gain 10^(-L/10) of the air-to-ground link; received power
/// from a platform transmitting P watts is P * gain.
double atg_gain_linear(double altitude_m, double horizontal_m,
                       const Environment& env, const RadioConfig& radio);

/// Terrestrial channel power gain fade * d^-alpha (implicit 1 m reference
/// distance). The fade variate is supplied by the caller, sampled once per
/// link per realization. Throws std::invalid_argument for d <= 0.
double terrestrial_gain(double distance_m, double alpha, double fade);

/// Small-scale fading power gain for terrestrial links: exponential with
/// unit mean (Rayleigh amplitude).
double sample_fade(RandomStream& stream);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace dronecell

#endif  // DRONECELL_CHANNEL_HPP
