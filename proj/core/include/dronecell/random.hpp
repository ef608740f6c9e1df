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

#ifndef DRONECELL_RANDOM_HPP
#define DRONECELL_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace dronecell {

// Substream labels used by the deployment sampler. Each label owns one
// independent value sequence per (master seed, trial index); which code
// consumes which label, and in what order, is part of the reproducibility
// contract.
inline constexpr std::string_view kStreamTerrestrial = "bs";
inline constexpr std::string_view kStreamUsers = "users";
inline constexpr std::string_view kStreamDrones = "drones";
inline constexpr std::string_view kStreamTierSplit = "tier";
inline constexpr std::string_view kStreamFading = "fading";

/// Deterministic random substream addressed by (master seed, trial index,
/// label). Equal triples produce bit-identical sequences; distinct labels
/// produce statistically independent sequences.
///
/// The variate transforms are written out here instead of using the
/// <random> distributions because the standard pins down engine output but
/// not distribution output, and sequences must be reproducible across
/// compilers.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t trial_index,
               std::string_view label)
      : engine_(derive_seed(master_seed, trial_index, label)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Exponential with unit mean.
  double next_exponential() { return -std::log1p(-next_uniform()); }

  /// Poisson-distributed count with the given mean.
  ///
  /// Knuth's product-of-uniforms method, applied to chunks of at most 256
  /// so the exp(-mean) threshold stays far from the underflow limit for
  /// arbitrarily large means. The chunk sum is itself Poisson.
  std::uint64_t next_poisson(double mean) {
    std::uint64_t total = 0;
    double remaining = mean;
    while (remaining > 0.0) {
      const double chunk = remaining > 256.0 ? 256.0 : remaining;
      remaining -= chunk;
      const double threshold = std::exp(-chunk);
      double product = next_uniform();
      while (product > threshold) {
        ++total;
        product *= next_uniform();
      }
    }
    return total;
  }

  static std::uint64_t derive_seed(std::uint64_t master_seed,
                                   std::uint64_t trial_index,
                                   std::string_view label) {
    std::uint64_t seed = mix(master_seed);
    seed = mix(seed ^ mix(trial_index + 0x9e3779b97f4a7c15ull));
    for (const char c : label) {
      seed = mix(seed ^ static_cast<std::uint8_t>(c));
    }
    return seed;
  }

 private:
  // SplitMix64 finalizer; full avalanche, so nearby triples land on
  // unrelated seeds.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace dronecell

#endif  // DRONECELL_RANDOM_HPP
