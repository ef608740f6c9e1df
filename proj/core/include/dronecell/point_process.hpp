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

#ifndef DRONECELL_POINT_PROCESS_HPP
#define DRONECELL_POINT_PROCESS_HPP

#include "dronecell/geometry.hpp"
#include "dronecell/random.hpp"

namespace dronecell {

/// Samples a homogeneous Poisson point process on the outer disk of
/// `region`: the point count is Poisson with mean `expected_count` and the
/// points are i.i.d. uniform on the disk.
///
/// Throws std::invalid_argument for a negative expected count or a
/// non-positive region radius.
PointSet sample_ppp(double expected_count, const Region& region,
                    RandomStream& stream);

/// Samples exactly `count` i.i.d. uniform points on a centered disk.
/// The radius of each point has CDF (r / radius)^2; sampling is by
/// inverse CDF (radius * sqrt(U)), not rejection, so the draw count per
/// point is fixed.
PointSet sample_uniform_disk(std::size_t count, double radius,
                             RandomStream& stream);

}  // namespace dronecell

#endif  // DRONECELL_POINT_PROCESS_HPP
