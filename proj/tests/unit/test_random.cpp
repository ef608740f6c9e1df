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
#include <vector>

#include <doctest.h>

#include "dronecell/random.hpp"

namespace dronecell {
namespace {

TEST_CASE("equal stream triples produce identical sequences") {
  RandomStream a(42, 7, "bs");
  RandomStream b(42, 7, "bs");
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("distinct labels, trials, and seeds produce distinct sequences") {
  RandomStream base(42, 7, "bs");
  RandomStream other_label(42, 7, "users");
  RandomStream other_trial(42, 8, "bs");
  RandomStream other_seed(43, 7, "bs");
  const std::uint64_t first = base.next_u64();
  CHECK(first != other_label.next_u64());
  CHECK(first != other_trial.next_u64());
  CHECK(first != other_seed.next_u64());
}

TEST_CASE("derive_seed is stable and label-sensitive") {
  CHECK(RandomStream::derive_seed(1, 2, "bs") ==
        RandomStream::derive_seed(1, 2, "bs"));
  CHECK(RandomStream::derive_seed(1, 2, "bs") !=
        RandomStream::derive_seed(1, 2, "users"));
  CHECK(RandomStream::derive_seed(1, 2, "tier") !=
        RandomStream::derive_seed(1, 3, "tier"));
}

TEST_CASE("next_uniform stays in [0, 1) with the right mean") {
  RandomStream stream(3, 0, "bs");
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = stream.next_uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("next_exponential has unit mean") {
  RandomStream stream(3, 1, "fading");
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = stream.next_exponential();
    REQUIRE(x >= 0.0);
    sum += x;
  }
  CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));
}

void check_poisson_moments(double mean, int n, std::uint64_t seed) {
  RandomStream stream(seed, 0, "bs");
  std::vector<double> counts;
  counts.reserve(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = static_cast<double>(stream.next_poisson(mean));
    counts.push_back(c);
    sum += c;
  }
  const double sample_mean = sum / n;
  double ss = 0.0;
  for (const double c : counts) {
    ss += (c - sample_mean) * (c - sample_mean);
  }
  const double sample_var = ss / (n - 1);
  CHECK(sample_mean == doctest::Approx(mean).epsilon(0.03));
  CHECK(sample_var / sample_mean == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("next_poisson matches Poisson moments at small and chunked means") {
  check_poisson_moments(5.0, 10000, 11);
  check_poisson_moments(20.0, 10000, 12);
  // Above the 256 chunk size, exercised as two partial products.
  check_poisson_moments(300.0, 5000, 13);
}

TEST_CASE("next_poisson handles degenerate means") {
  RandomStream stream(9, 0, "bs");
  for (int i = 0; i < 100; ++i) {
    CHECK(stream.next_poisson(0.0) == 0);
  }
  // A tiny mean must be almost always zero but still reachable.
  RandomStream tiny(9, 1, "bs");
  std::uint64_t total = 0;
  for (int i = 0; i < 100000; ++i) {
    total += tiny.next_poisson(0.01);
  }
  CHECK(total > 800);
  CHECK(total < 1200);
}

}  // namespace
}  // namespace dronecell
