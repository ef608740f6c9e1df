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

#include "dronecell/environment.hpp"

namespace dronecell {

std::optional<Environment> environment_preset(std::string_view name) {
  if (name == "dense-urban") {
    return Environment{12.08, 0.11, 1.6, 23.0};
  }
  if (name == "sub-urban") {
    return Environment{4.88, 0.43, 0.1, 21.0};
  }
  if (name == "high-rise") {
    return Environment{27.23, 0.08, 2.3, 34.0};
  }
  return std::nullopt;
}

const std::vector<std::string>& environment_preset_names() {
  static const std::vector<std::string> names = {"dense-urban", "sub-urban",
                                                 "high-rise"};
  return names;
}

}  // namespace dronecell
