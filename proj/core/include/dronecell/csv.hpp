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

#ifndef DRONECELL_CSV_HPP
#define DRONECELL_CSV_HPP

#include <string>

#include "dronecell/experiment.hpp"
#include "dronecell/metrics.hpp"

namespace dronecell {

/// Writes a sweep as CSV, rows in grid order. Columns:
///   parameter,mean,stderr,ci95_low,ci95_high,trials
/// plus, when the sweep carries association counts (load sweeps):
///   users_terrestrial,users_big_drone,users_small_drone
/// Reals are printed with 10 significant digits, so identical sweeps
/// yield byte-identical files. Unwritable path raises std::runtime_error
/// naming the path.
void emit_csv(const SweepResult& result, const std::string& path);

/// Writes one realization's per-user metrics as CSV. Columns:
///   user,x,y,sinr,se,shared_se,serving_kind,serving_node
/// `positions` must align index-for-index with `users`.
void emit_csv(const std::vector<UserMetrics>& users, const PointSet& positions,
              const std::string& path);

}  // namespace dronecell

#endif  // DRONECELL_CSV_HPP
