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

#include "dronecell/point_process.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dronecell {

PointSet sample_uniform_disk(std::size_t count, double radius,
                             RandomStream& stream) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("sample_uniform_disk: radius must be > 0");
  }
  PointSet points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Two draws per point, radius first. Draw order is load-bearing for
    // reproducibility.
    const double r = radius * std::sqrt(stream.next_uniform());
    const double theta = 2.0 * std::numbers::pi * stream.next_uniform();
    points.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return points;
}

PointSet sample_ppp(double expected_count, const Region& region,
                    RandomStream& stream) {
  if (!(expected_count >= 0.0)) {
    throw std::invalid_argument("sample_ppp: expected_count must be >= 0");
  }
  if (!(region.radius > 0.0)) {
    throw std::invalid_argument("sample_ppp: region radius must be > 0");
  }
  const std::uint64_t count = stream.next_poisson(expected_count);
  return sample_uniform_disk(static_cast<std::size_t>(count), region.radius,
                             stream);
}

}  // namespace dronecell
