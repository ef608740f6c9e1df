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

#include "dronecell/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dronecell {

namespace {

std::string num(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + path);
  }
  return out;
}

void finish_csv(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) {
    throw std::runtime_error("error while writing output file: " + path);
  }
}

}  // namespace

void emit_csv(const SweepResult& result, const std::string& path) {
  const bool counts =
      !result.points.empty() && result.points.front().has_counts;
  std::ofstream out = open_csv(path);
  out << "parameter,mean,stderr,ci95_low,ci95_high,trials";
  if (counts) {
    out << ",users_terrestrial,users_big_drone,users_small_drone";
  }
  out << "\n";
  for (const SweepPoint& point : result.points) {
    out << num(point.parameter) << ',' << num(point.mean) << ','
        << num(point.std_error) << ',' << num(point.ci95_low) << ','
        << num(point.ci95_high) << ',' << point.trials;
    if (counts) {
      out << ',' << num(point.mean_counts[kind_index(NodeKind::kTerrestrial)])
          << ',' << num(point.mean_counts[kind_index(NodeKind::kBigDrone)])
          << ',' << num(point.mean_counts[kind_index(NodeKind::kSmallDrone)]);
    }
    out << "\n";
  }
  finish_csv(out, path);
}

void emit_csv(const std::vector<UserMetrics>& users, const PointSet& positions,
              const std::string& path) {
  if (users.size() != positions.size()) {
    throw std::invalid_argument(
        "emit_csv: metrics and positions differ in length");
  }
  std::ofstream out = open_csv(path);
  out << "user,x,y,sinr,se,shared_se,serving_kind,serving_node\n";
  for (std::size_t u = 0; u < users.size(); ++u) {
    const UserMetrics& m = users[u];
    out << u << ',' << num(positions[u].x) << ',' << num(positions[u].y)
        << ',' << num(m.sinr) << ',' << num(m.se) << ',' << num(m.shared_se)
        << ',' << node_kind_name(m.serving_kind) << ',' << m.serving_node
        << "\n";
  }
  finish_csv(out, path);
}

}  // namespace dronecell
