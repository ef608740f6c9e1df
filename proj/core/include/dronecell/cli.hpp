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

#ifndef DRONECELL_CLI_HPP
#define DRONECELL_CLI_HPP

namespace dronecell {

/// Full command-line entry point, argv[0] included.
///
/// Subcommands: fig2 (drone-only proportion sweep), fig3 (drone-only
/// altitude sweep), fig4 (load-ratio sweep with and without drones),
/// optimize (configured sweep plus optimum report), trial (per-user dump
/// of one realization). Common flags: --config, --seed, --trials, --out,
/// --env. Master seed precedence: config file < DRONECELL_SEED < --seed.
///
/// Returns 0 on success, 1 on configuration or usage errors, 2 on runtime
/// failures (I/O, degenerate sweeps). Never throws.
int run_command(int argc, const char* const* argv);

}  // namespace dronecell

#endif  // DRONECELL_CLI_HPP
