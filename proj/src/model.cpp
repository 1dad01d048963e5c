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

#include "d2dsec/model.hpp"

#include <stdexcept>

namespace d2dsec {
namespace {

constexpr int kResampleBudget = 10000;
constexpr double kTwoPi = 6.283185307179586476925286766559;

Point sample_disk(RandomStream& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double th = kTwoPi * rng.uniform();
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace

void SystemConfig::validate() const {
  if (num_cus < 1) throw std::invalid_argument("config: num_cus must be >= 1");
  if (bs_antennas < 1) throw std::invalid_argument("config: bs_antennas must be >= 1");
  if (eve_antennas < 1) throw std::invalid_argument("config: eve_antennas must be >= 1");
  if (num_rbs != num_cus) {
    throw std::invalid_argument("config: num_rbs must equal num_cus (fully loaded network)");
  }
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("config: bandwidth_hz must be positive");
  if (!(noise_watt > 0.0)) throw std::invalid_argument("config: noise power must be positive");
  if (cu_power_cap.size() != num_cus) {
    throw std::invalid_argument("config: cu_power_cap length must equal num_cus");
  }
  if (d2d_power_cap.size() != num_d2d) {
    throw std::invalid_argument("config: d2d_power_cap length must equal num_d2d");
  }
  for (double p : cu_power_cap) {
    if (!(p > 0.0)) throw std::invalid_argument("config: CU power caps must be positive");
  }
  for (double q : d2d_power_cap) {
    if (!(q > 0.0)) throw std::invalid_argument("config: D2D power caps must be positive");
  }
  if (!(min_link_dist_m > 0.0) || !(min_link_dist_m < d2d_max_dist_m) ||
      !(d2d_max_dist_m <= cell_radius_m)) {
    throw std::invalid_argument("config: require 0 < min_link_dist < d2d_max_dist <= cell_radius");
  }
}

SystemConfig default_config() {
  SystemConfig cfg;
  cfg.cu_power_cap.assign(cfg.num_cus, dbm_to_watt(20.0));
  cfg.d2d_power_cap.assign(cfg.num_d2d, dbm_to_watt(20.0));
  cfg.validate();
  return cfg;
}

SystemConfig with_counts(const SystemConfig& base, std::size_t num_cus, std::size_t num_d2d) {
  SystemConfig cfg = base;
  cfg.num_cus = num_cus;
  cfg.num_rbs = num_cus;
  cfg.num_d2d = num_d2d;
  const double p = base.cu_power_cap.empty() ? dbm_to_watt(20.0) : base.cu_power_cap.front();
  const double q = base.d2d_power_cap.empty() ? dbm_to_watt(20.0) : base.d2d_power_cap.front();
  cfg.cu_power_cap.assign(num_cus, p);
  cfg.d2d_power_cap.assign(num_d2d, q);
  cfg.validate();
  return cfg;
}

Topology sample_topology(const SystemConfig& cfg, RandomStream& rng) {
  cfg.validate();
  const double R = cfg.cell_radius_m;
  const double dmin = cfg.min_link_dist_m;

  Topology topo;
  topo.bs = {0.0, 0.0};
  topo.eve = sample_disk(rng, R);

  // Transmitters must keep the minimum link distance to both receivers
  // they are heard by (base station and eavesdropper).
  auto sample_tx = [&](const char* what) {
    for (int tries = 0; tries < kResampleBudget; ++tries) {
      const Point p = sample_disk(rng, R);
      if (distance(p, topo.bs) >= dmin && distance(p, topo.eve) >= dmin) {
        return p;
      }
    }
    throw std::runtime_error(std::string("sample_topology: retry budget exhausted for ") + what);
  };

  topo.cu_pos.reserve(cfg.num_cus);
  for (std::size_t m = 0; m < cfg.num_cus; ++m) {
    topo.cu_pos.push_back(sample_tx("CU"));
  }

  topo.d2d_tx_pos.reserve(cfg.num_d2d);
  topo.d2d_rx_pos.reserve(cfg.num_d2d);
  for (std::size_t n = 0; n < cfg.num_d2d; ++n) {
    const Point tx = sample_tx("D2D-Tx");
    topo.d2d_tx_pos.push_back(tx);
    bool placed = false;
    for (int tries = 0; tries < kResampleBudget && !placed; ++tries) {
      const double ang = kTwoPi * rng.uniform();
      const double d = rng.uniform(dmin, cfg.d2d_max_dist_m);
      const Point rx{tx.x + d * std::cos(ang), tx.y + d * std::sin(ang)};
      if (distance(rx, topo.bs) <= R) {
        topo.d2d_rx_pos.push_back(rx);
        placed = true;
      }
    }
    if (!placed) {
      throw std::runtime_error("sample_topology: retry budget exhausted for D2D-Rx");
    }
  }
  return topo;
}

ChannelSet sample_channels(const SystemConfig& cfg, const Topology& topo, RandomStream& rng) {
  cfg.validate();
  if (topo.cu_pos.size() != cfg.num_cus || topo.d2d_tx_pos.size() != cfg.num_d2d) {
    throw std::invalid_argument("sample_channels: topology inconsistent with config");
  }

  // One vector draw: log-normal shadowing over d^-alpha path loss, then
  // i.i.d. CN(0,1) entries.
  auto draw_vec = [&](std::size_t len, double dist) {
    const double d = std::max(dist, cfg.min_link_dist_m);
    const double shadow_db = cfg.shadowing_std_db * rng.normal();
    const double gain = std::pow(d, -cfg.path_loss_exponent) * std::pow(10.0, shadow_db / 10.0);
    const double s = std::sqrt(gain);
    cvec v(len);
    do {
      for (std::size_t i = 0; i < len; ++i) {
        v[i] = s * rng.cgauss();
      }
    } while (sq_norm(v) == 0.0);
    return v;
  };

  ChannelSet ch;
  ch.M = cfg.num_cus;
  ch.N = cfg.num_d2d;
  ch.K = cfg.num_rbs;
  ch.B = cfg.bs_antennas;
  ch.E = cfg.eve_antennas;
  ch.g_mb.reserve(ch.M * ch.K);
  ch.g_me.reserve(ch.M * ch.K);
  ch.h_nb.reserve(ch.N * ch.K);
  ch.h_ne.reserve(ch.N * ch.K);

  for (std::size_t m = 0; m < ch.M; ++m) {
    const double d_bs = distance(topo.cu_pos[m], topo.bs);
    const double d_eve = distance(topo.cu_pos[m], topo.eve);
    for (std::size_t k = 0; k < ch.K; ++k) {
      ch.g_mb.push_back(draw_vec(ch.B, d_bs));
      ch.g_me.push_back(draw_vec(ch.E, d_eve));
    }
  }
  for (std::size_t n = 0; n < ch.N; ++n) {
    const double d_bs = distance(topo.d2d_tx_pos[n], topo.bs);
    const double d_eve = distance(topo.d2d_tx_pos[n], topo.eve);
    for (std::size_t k = 0; k < ch.K; ++k) {
      ch.h_nb.push_back(draw_vec(ch.B, d_bs));
      ch.h_ne.push_back(draw_vec(ch.E, d_eve));
    }
  }
  return ch;
}

}  // namespace d2dsec
