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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dronecell/point_process.hpp"

namespace dronecell {
namespace {

TEST_CASE("zero intensity yields an empty point set") {
  RandomStream stream(1, 0, "bs");
  CHECK(sample_ppp(0.0, Region{}, stream).empty());
}

TEST_CASE("ppp count has Poisson mean and variance") {
  const Region region{2000.0, 1000.0};
  const int trials = 10000;
  std::vector<double> counts;
  counts.reserve(trials);
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    RandomStream stream(21, static_cast<std::uint64_t>(t), "bs");
    const double c =
        static_cast<double>(sample_ppp(20.0, region, stream).size());
    counts.push_back(c);
    sum += c;
  }
  const double mean = sum / trials;
  double ss = 0.0;
  for (const double c : counts) {
    ss += (c - mean) * (c - mean);
  }
  const double variance = ss / (trials - 1);
  CHECK(mean > 19.7);
  CHECK(mean < 20.3);
  CHECK(variance / mean > 0.9);
  CHECK(variance / mean < 1.1);
}

TEST_CASE("every sampled point lies inside the outer disk") {
  const Region region{500.0, 250.0};
  for (int t = 0; t < 20; ++t) {
    RandomStream stream(5, static_cast<std::uint64_t>(t), "users");
    for (const Point& p : sample_ppp(50.0, region, stream)) {
      CHECK(p.x * p.x + p.y * p.y <= region.radius * region.radius);
    }
  }
}

TEST_CASE("equal streams reproduce bit-identical point sets") {
  RandomStream a(77, 3, "drones");
  RandomStream b(77, 3, "drones");
  CHECK(sample_ppp(30.0, Region{}, a) == sample_ppp(30.0, Region{}, b));
}

TEST_CASE("swapping the substream label changes the sample") {
  RandomStream a(77, 3, "drones");
  RandomStream b(77, 3, "users");
  CHECK(sample_ppp(30.0, Region{}, a) != sample_ppp(30.0, Region{}, b));
}

TEST_CASE("uniform disk sample has exact cardinality") {
  RandomStream stream(4, 0, "users");
  CHECK(sample_uniform_disk(0, 1.0, stream).empty());
  CHECK(sample_uniform_disk(5, 1.0, stream).size() == 5);
}

TEST_CASE("uniform disk radius has mean 2R/3") {
  // E|P| for a uniform point on a disk of radius R is 2R/3, computed by
  // integrating r * (2r/R^2) over [0, R].
  RandomStream stream(8, 0, "users");
  const std::size_t n = 100000;
  const PointSet points = sample_uniform_disk(n, 1.0, stream);
  double sum = 0.0;
  for (const Point& p : points) {
    sum += norm(p);
  }
  const double mean = sum / static_cast<double>(n);
  CHECK(mean > 0.664);
  CHECK(mean < 0.669);
}

TEST_CASE("uniform disk mass inside a sub-disk follows the area law") {
  RandomStream stream(15, 0, "users");
  const std::size_t n = 100000;
  const double radius = 2.0;
  const double rho = 1.0;
  const PointSet points = sample_uniform_disk(n, radius, stream);
  std::size_t inside = 0;
  for (const Point& p : points) {
    if (norm(p) <= rho) {
      ++inside;
    }
  }
  const double expected = (rho / radius) * (rho / radius);
  const double std_error = std::sqrt(expected * (1.0 - expected) / n);
  CHECK(std::abs(static_cast<double>(inside) / n - expected) <
        3.0 * std_error);
}

TEST_CASE("invalid point process parameters are rejected") {
  RandomStream stream(1, 0, "bs");
  CHECK_THROWS_AS(sample_ppp(-1.0, Region{}, stream), std::invalid_argument);
  CHECK_THROWS_AS(sample_ppp(1.0, Region{-5.0, 1.0}, stream),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_uniform_disk(3, 0.0, stream), std::invalid_argument);
}

}  // namespace
}  // namespace dronecell
