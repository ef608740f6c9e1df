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

#include "dronecell/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dronecell/errors.hpp"

namespace dronecell {

namespace {

std::string trim(const std::string& s) {
  const std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double parse_double(const std::string& key, const std::string& value) {
  const char* text = value.c_str();
  char* end = nullptr;
  const double parsed = std::strtod(text, &end);
  if (end == text || *end != '\0') {
    throw ConfigError("config key " + key + ": expected a number, got '" +
                      value + "'");
  }
  return parsed;
}

double parse_range(const std::string& key, const std::string& value,
                   double lo, double hi, const char* range) {
  const double parsed = parse_double(key, value);
  if (!(parsed >= lo && parsed <= hi)) {
    throw ConfigError("config key " + key + ": expected a value in " + range +
                      ", got " + value);
  }
  return parsed;
}

double parse_positive(const std::string& key, const std::string& value) {
  const double parsed = parse_double(key, value);
  if (!(parsed > 0.0)) {
    throw ConfigError("config key " + key + ": expected a value > 0, got " +
                      value);
  }
  return parsed;
}

double parse_nonnegative(const std::string& key, const std::string& value) {
  const double parsed = parse_double(key, value);
  if (!(parsed >= 0.0)) {
    throw ConfigError("config key " + key + ": expected a value >= 0, got " +
                      value);
  }
  return parsed;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  if (value.empty() || value[0] == '-') {
    throw ConfigError("config key " + key +
                      ": expected a non-negative integer, got '" + value +
                      "'");
  }
  const char* text = value.c_str();
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(text, &end, 10);
  if (end == text || *end != '\0') {
    throw ConfigError("config key " + key +
                      ": expected a non-negative integer, got '" + value +
                      "'");
  }
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") {
    return true;
  }
  if (value == "false" || value == "0") {
    return false;
  }
  throw ConfigError("config key " + key + ": expected true or false, got '" +
                    value + "'");
}

std::vector<double> parse_grid(const std::string& key,
                               const std::string& value) {
  std::vector<double> grid;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::string token = trim(item);
    if (token.empty()) {
      throw ConfigError("config key " + key +
                        ": expected comma-separated numbers, got '" + value +
                        "'");
    }
    grid.push_back(parse_double(key, token));
  }
  if (grid.empty()) {
    throw ConfigError("config key " + key + ": grid must not be empty");
  }
  return grid;
}

std::string preset_list() {
  std::string out;
  for (const std::string& name : environment_preset_names()) {
    if (!out.empty()) {
      out += ", ";
    }
    out += name;
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

const char* sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::kProportion:
      return "proportion";
    case SweepKind::kAltitude:
      return "altitude";
    case SweepKind::kLoad:
      return "load";
  }
  return "unknown";
}

const char* metric_selection_name(MetricSelection metric) {
  switch (metric) {
    case MetricSelection::kTypicalSe:
      return "typical-se";
    case MetricSelection::kNetworkSe:
      return "network-se";
    case MetricSelection::kCounts:
      return "counts";
  }
  return "unknown";
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;

  // Environment resolution is order-independent: the name and any env_*
  // overrides are collected first and composed after the last line.
  std::string env_name = config.environment_name;
  double env_values[4] = {0.0, 0.0, 0.0, 0.0};
  bool env_seen[4] = {false, false, false, false};

  std::stringstream stream(text);
  std::string raw_line;
  while (std::getline(stream, raw_line)) {
    std::string line = raw_line;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line is not 'key = value': '" + raw_line +
                        "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = unquote(trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("config line has an empty key: '" + raw_line + "'");
    }

    if (key == "environment") {
      env_name = value;
    } else if (key == "env_a") {
      env_values[0] = parse_positive(key, value);
      env_seen[0] = true;
    } else if (key == "env_b") {
      env_values[1] = parse_positive(key, value);
      env_seen[1] = true;
    } else if (key == "env_eta_los_db") {
      env_values[2] = parse_nonnegative(key, value);
      env_seen[2] = true;
    } else if (key == "env_eta_nlos_db") {
      env_values[3] = parse_nonnegative(key, value);
      env_seen[3] = true;
    } else if (key == "carrier_frequency_hz") {
      config.radio.carrier_frequency_hz = parse_positive(key, value);
    } else if (key == "light_speed") {
      config.radio.light_speed = parse_positive(key, value);
    } else if (key == "path_loss_exponent") {
      config.radio.path_loss_exponent = parse_double(key, value);
      if (!(config.radio.path_loss_exponent > 2.0)) {
        throw ConfigError(
            "config key path_loss_exponent: expected a value > 2, got " +
            value);
      }
    } else if (key == "noise_power_w") {
      config.radio.noise_power_w = parse_positive(key, value);
    } else if (key == "tx_power_terrestrial_w") {
      config.radio.tx_power_terrestrial_w = parse_positive(key, value);
    } else if (key == "tx_power_big_w") {
      config.radio.tx_power_big_w = parse_positive(key, value);
    } else if (key == "tx_power_small_w") {
      config.radio.tx_power_small_w = parse_positive(key, value);
    } else if (key == "altitude_big_m") {
      config.radio.altitude_big_m = parse_positive(key, value);
    } else if (key == "altitude_small_m") {
      config.radio.altitude_small_m = parse_positive(key, value);
    } else if (key == "lambda_terrestrial") {
      config.lambda_terrestrial = parse_nonnegative(key, value);
    } else if (key == "lambda_users") {
      config.lambda_users = parse_nonnegative(key, value);
    } else if (key == "lambda_drones") {
      config.lambda_drones = parse_nonnegative(key, value);
    } else if (key == "small_fraction") {
      config.small_fraction = parse_range(key, value, 0.0, 1.0, "[0, 1]");
    } else if (key == "drones_enabled") {
      config.drones_enabled = parse_bool(key, value);
    } else if (key == "region_radius_m") {
      config.region_radius_m = parse_positive(key, value);
    } else if (key == "analysis_radius_m") {
      config.analysis_radius_m = parse_nonnegative(key, value);
    } else if (key == "trials") {
      config.trials = parse_u64(key, value);
      if (config.trials < 2) {
        throw ConfigError("config key trials: expected a value >= 2, got " +
                          value);
      }
    } else if (key == "master_seed") {
      config.master_seed = parse_u64(key, value);
    } else if (key == "sweep") {
      if (value == "proportion") {
        config.sweep = SweepKind::kProportion;
      } else if (value == "altitude") {
        config.sweep = SweepKind::kAltitude;
      } else if (value == "load") {
        config.sweep = SweepKind::kLoad;
      } else {
        throw ConfigError(
            "config key sweep: expected proportion, altitude, or load, "
            "got '" +
            value + "'");
      }
    } else if (key == "metric") {
      if (value == "typical-se") {
        config.metric = MetricSelection::kTypicalSe;
      } else if (value == "network-se") {
        config.metric = MetricSelection::kNetworkSe;
      } else if (value == "counts") {
        config.metric = MetricSelection::kCounts;
      } else {
        throw ConfigError(
            "config key metric: expected typical-se, network-se, or "
            "counts, got '" +
            value + "'");
      }
    } else if (key == "grid") {
      config.grid = parse_grid(key, value);
    } else if (key == "output_path") {
      config.output_path = value;
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }

  config.environment_name = env_name;
  if (env_name == "custom") {
    static const char* kEnvKeys[4] = {"env_a", "env_b", "env_eta_los_db",
                                      "env_eta_nlos_db"};
    for (int i = 0; i < 4; ++i) {
      if (!env_seen[i]) {
        throw ConfigError(std::string("environment = custom requires ") +
                          kEnvKeys[i]);
      }
    }
    config.env = {env_values[0], env_values[1], env_values[2],
                  env_values[3]};
  } else {
    const std::optional<Environment> preset = environment_preset(env_name);
    if (!preset) {
      throw ConfigError("unknown environment '" + env_name +
                        "' (presets: " + preset_list() + ", or custom)");
    }
    config.env = *preset;
    if (env_seen[0]) config.env.a = env_values[0];
    if (env_seen[1]) config.env.b = env_values[1];
    if (env_seen[2]) config.env.eta_los_db = env_values[2];
    if (env_seen[3]) config.env.eta_nlos_db = env_values[3];
  }
  if (!environment_valid(config.env)) {
    throw ConfigError(
        "environment parameters must satisfy a > 0, b > 0, "
        "0 <= env_eta_los_db <= env_eta_nlos_db");
  }

  if (config.analysis_radius_m > config.region_radius_m) {
    throw ConfigError(
        "config key analysis_radius_m: expected a value in "
        "[0, region_radius_m], got " +
        format_double(config.analysis_radius_m));
  }

  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string render_config(const RunConfig& config) {
  std::string out;
  const auto line = [&out](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  };
  const auto number = [&line](const char* key, double value) {
    line(key, format_double(value));
  };

  line("environment", config.environment_name);
  number("env_a", config.env.a);
  number("env_b", config.env.b);
  number("env_eta_los_db", config.env.eta_los_db);
  number("env_eta_nlos_db", config.env.eta_nlos_db);
  number("carrier_frequency_hz", config.radio.carrier_frequency_hz);
  number("light_speed", config.radio.light_speed);
  number("path_loss_exponent", config.radio.path_loss_exponent);
  number("noise_power_w", config.radio.noise_power_w);
  number("tx_power_terrestrial_w", config.radio.tx_power_terrestrial_w);
  number("tx_power_big_w", config.radio.tx_power_big_w);
  number("tx_power_small_w", config.radio.tx_power_small_w);
  number("altitude_big_m", config.radio.altitude_big_m);
  number("altitude_small_m", config.radio.altitude_small_m);
  number("lambda_terrestrial", config.lambda_terrestrial);
  number("lambda_users", config.lambda_users);
  number("lambda_drones", config.lambda_drones);
  number("small_fraction", config.small_fraction);
  line("drones_enabled", config.drones_enabled ? "true" : "false");
  number("region_radius_m", config.region_radius_m);
  number("analysis_radius_m", config.analysis_radius_m);
  line("trials", std::to_string(config.trials));
  line("master_seed", std::to_string(config.master_seed));
  line("sweep", sweep_kind_name(config.sweep));
  line("metric", metric_selection_name(config.metric));
  if (!config.grid.empty()) {
    std::string joined;
    for (const double value : config.grid) {
      if (!joined.empty()) {
        joined += ", ";
      }
      joined += format_double(value);
    }
    line("grid", joined);
  }
  if (!config.output_path.empty()) {
    line("output_path", "\"" + config.output_path + "\"");
  }
  return out;
}

Metric selection_metric(MetricSelection metric) {
  return metric == MetricSelection::kTypicalSe ? Metric::kTypicalSe
                                               : Metric::kNetworkSe;
}

std::vector<double> default_grid(SweepKind kind) {
  std::vector<double> grid;
  switch (kind) {
    case SweepKind::kProportion:
      for (int i = 0; i <= 10; ++i) {
        grid.push_back(static_cast<double>(i) / 10.0);
      }
      break;
    case SweepKind::kAltitude:
      for (int i = 1; i <= 20; ++i) {
        grid.push_back(50.0 * static_cast<double>(i));
      }
      break;
    case SweepKind::kLoad:
      grid = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
      break;
  }
  return grid;
}

DeploymentSpec deployment_spec(const RunConfig& config) {
  DeploymentSpec spec;
  spec.lambda_terrestrial = config.lambda_terrestrial;
  spec.lambda_users = config.lambda_users;
  spec.lambda_drones = config.lambda_drones;
  spec.small_fraction = config.small_fraction;
  spec.drones_enabled = config.drones_enabled;
  spec.env = config.env;
  spec.radio = config.radio;
  spec.region.radius = config.region_radius_m;
  spec.region.analysis_radius = config.analysis_radius_m == 0.0
                                    ? config.region_radius_m / 2.0
                                    : config.analysis_radius_m;
  return spec;
}

}  // namespace dronecell
