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

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "d2dsec/algebra.hpp"
#include "d2dsec/random.hpp"

namespace d2dsec {

// dBm/dB conversions live here; everything downstream works in linear watts.
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

/**
 * Scenario constants for one single-cell uplink.
 *
 * The network is fully loaded: num_rbs always equals num_cus, one cellular
 * user per resource block. Power caps are stored per user in watts.
 */
struct SystemConfig {
  std::size_t num_cus = 6;      // M
  std::size_t num_d2d = 10;     // N
  std::size_t num_rbs = 6;      // K, tracks num_cus
  std::size_t bs_antennas = 4;  // B
  std::size_t eve_antennas = 4; // E
  double bandwidth_hz = 1.0;    // V
  double noise_watt = 1e-13;    // N0, -100 dBm
  std::vector<double> cu_power_cap;   // P_m, length M
  std::vector<double> d2d_power_cap;  // Q_n, length N
  double cell_radius_m = 500.0;
  double d2d_max_dist_m = 50.0;
  double path_loss_exponent = 3.7;
  double shadowing_std_db = 8.0;
  double min_link_dist_m = 1.0;

  // Throws std::invalid_argument when any structural invariant is broken.
  void validate() const;
};

// Default scenario: M = K = 6, N = 10, B = E = 4, 20 dBm caps everywhere,
// -100 dBm noise, 500 m cell, 50 m maximum pair distance, exponent 3.7,
// 8 dB shadowing.
SystemConfig default_config();

// Rebuilds a config for new user counts, replicating the first power cap.
SystemConfig with_counts(const SystemConfig& base, std::size_t num_cus, std::size_t num_d2d);

// Parses a "key = value" config file ('#' starts a comment). Unknown keys
// are an error; missing keys keep their defaults. Powers and noise are
// given in dBm, geometry in meters; see the README for the schema.
SystemConfig load_config(const std::string& path);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// One sampled network layout. The base station sits at the origin; all
// users and the eavesdropper lie inside the cell disk.
struct Topology {
  Point bs;
  Point eve;
  std::vector<Point> cu_pos;
  std::vector<Point> d2d_tx_pos;
  std::vector<Point> d2d_rx_pos;
};

/**
 * Channel vectors for every transmitter/receiver/RB combination.
 *
 * g_* are cellular-user channels, h_* are D2D transmitter channels; the
 * *b vectors point at the base station (length B), the *e vectors at the
 * eavesdropper (length E). Flat layout, index (user, rb).
 */
struct ChannelSet {
  std::size_t M = 0, N = 0, K = 0, B = 0, E = 0;
  std::vector<cvec> g_mb;  // M*K entries of length B
  std::vector<cvec> g_me;  // M*K entries of length E
  std::vector<cvec> h_nb;  // N*K entries of length B
  std::vector<cvec> h_ne;  // N*K entries of length E

  const cvec& cu_bs(std::size_t m, std::size_t k) const { return g_mb[m * K + k]; }
  const cvec& cu_eve(std::size_t m, std::size_t k) const { return g_me[m * K + k]; }
  const cvec& d2d_bs(std::size_t n, std::size_t k) const { return h_nb[n * K + k]; }
  const cvec& d2d_eve(std::size_t n, std::size_t k) const { return h_ne[n * K + k]; }
};

/**
 * Draws a topology: eavesdropper and transmitters uniform over the cell
 * disk, each D2D receiver at a uniform angle and uniform distance in
 * [min_link_dist, d2d_max_dist] from its transmitter. Draws violating the
 * minimum-distance or in-cell constraints are resampled; a generation
 * error is thrown if the retry budget is ever exhausted.
 */
Topology sample_topology(const SystemConfig& cfg, RandomStream& rng);

/**
 * Draws independent channels for every link and RB: i.i.d. unit-variance
 * circularly-symmetric Gaussian entries scaled by sqrt(gain), with
 * gain = d^-alpha * 10^(X/10), X ~ N(0, shadowing_std^2) redrawn per
 * vector and d clamped below by min_link_dist.
 */
ChannelSet sample_channels(const SystemConfig& cfg, const Topology& topo, RandomStream& rng);

}  // namespace d2dsec
