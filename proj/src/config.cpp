// d2dsec - secrecy-rate simulator for D2D underlaid cellular uplinks
// Copyright (C) 2026 the d2dsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Key-value config file loader for SystemConfig. Powers and noise are
// specified in dBm (matching how such budgets are usually quoted) and are
// converted to watts here, once.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "d2dsec/model.hpp"

namespace d2dsec {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config: trailing junk in value for '" + key + "': " + value);
  }
  return out;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  const double d = parse_double(key, value);
  if (d < 0.0 || d != static_cast<double>(static_cast<std::size_t>(d))) {
    throw std::invalid_argument("config: '" + key + "' must be a nonnegative integer");
  }
  return static_cast<std::size_t>(d);
}

}  // namespace

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path);
  }

  SystemConfig cfg = default_config();
  double cu_power_dbm = 20.0;
  double d2d_power_dbm = 20.0;
  double noise_dbm = -100.0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not of the form 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "num_cus") {
      cfg.num_cus = parse_count(key, value);
    } else if (key == "num_d2d") {
      cfg.num_d2d = parse_count(key, value);
    } else if (key == "bs_antennas") {
      cfg.bs_antennas = parse_count(key, value);
    } else if (key == "eve_antennas") {
      cfg.eve_antennas = parse_count(key, value);
    } else if (key == "bandwidth_hz") {
      cfg.bandwidth_hz = parse_double(key, value);
    } else if (key == "noise_dbm") {
      noise_dbm = parse_double(key, value);
    } else if (key == "cu_power_dbm") {
      cu_power_dbm = parse_double(key, value);
    } else if (key == "d2d_power_dbm") {
      d2d_power_dbm = parse_double(key, value);
    } else if (key == "cell_radius_m") {
      cfg.cell_radius_m = parse_double(key, value);
    } else if (key == "d2d_max_dist_m") {
      cfg.d2d_max_dist_m = parse_double(key, value);
    } else if (key == "path_loss_exponent") {
      cfg.path_loss_exponent = parse_double(key, value);
    } else if (key == "shadowing_std_db") {
      cfg.shadowing_std_db = parse_double(key, value);
    } else if (key == "min_link_dist_m") {
      cfg.min_link_dist_m = parse_double(key, value);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "' on line " +
                                  std::to_string(lineno));
    }
  }

  cfg.num_rbs = cfg.num_cus;
  cfg.noise_watt = dbm_to_watt(noise_dbm);
  cfg.cu_power_cap.assign(cfg.num_cus, dbm_to_watt(cu_power_dbm));
  cfg.d2d_power_cap.assign(cfg.num_d2d, dbm_to_watt(d2d_power_dbm));
  cfg.validate();
  return cfg;
}

}  // namespace d2dsec
