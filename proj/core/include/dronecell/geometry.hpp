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

#ifndef DRONECELL_GEOMETRY_HPP
#define DRONECELL_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace dronecell {

/// Planar position in meters.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double norm(const Point& p) { return std::hypot(p.x, p.y); }

/// Simulation geometry. Nodes and users populate the outer disk of
/// `radius`; metrics are evaluated only for users inside `analysis_radius`
/// so that every evaluated user sees interference from all sides.
struct Region {
  double radius = 2000.0;
  double analysis_radius = 1000.0;

  friend bool operator==(const Region&, const Region&) = default;
};

inline bool region_valid(const Region& r) {
  return r.radius > 0.0 && r.analysis_radius > 0.0 &&
         r.analysis_radius <= r.radius;
}

}  // namespace dronecell

#endif  // DRONECELL_GEOMETRY_HPP
