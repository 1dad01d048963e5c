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

#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"

using namespace d2dsec;

namespace {

bool channels_equal(const ChannelSet& a, const ChannelSet& b) {
  auto eq = [](const std::vector<cvec>& x, const std::vector<cvec>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return false;
    }
    return true;
  };
  return eq(a.g_mb, b.g_mb) && eq(a.g_me, b.g_me) && eq(a.h_nb, b.h_nb) && eq(a.h_ne, b.h_ne);
}

}  // namespace

TEST_CASE("dbm conversions") {
  CHECK(dbm_to_watt(-100.0) == doctest::Approx(1e-13).epsilon(1e-12));
  CHECK(dbm_to_watt(20.0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(watt_to_dbm(dbm_to_watt(17.5)) == doctest::Approx(17.5).epsilon(1e-12));
}

TEST_CASE("default config matches the documented scenario") {
  const SystemConfig cfg = default_config();
  CHECK(cfg.num_cus == 6);
  CHECK(cfg.num_rbs == 6);
  CHECK(cfg.num_d2d == 10);
  CHECK(cfg.bs_antennas == 4);
  CHECK(cfg.eve_antennas == 4);
  CHECK(cfg.bandwidth_hz == 1.0);
  CHECK(cfg.noise_watt == doctest::Approx(1e-13).epsilon(1e-12));
  CHECK(cfg.cu_power_cap.size() == 6);
  CHECK(cfg.cu_power_cap[0] == doctest::Approx(0.1));
  CHECK(cfg.d2d_power_cap.size() == 10);
  CHECK(cfg.cell_radius_m == 500.0);
  CHECK(cfg.d2d_max_dist_m == 50.0);
  CHECK(cfg.path_loss_exponent == 3.7);
  CHECK(cfg.shadowing_std_db == 8.0);
  CHECK(cfg.min_link_dist_m == 1.0);
}

TEST_CASE("config validation rejects broken setups") {
  SystemConfig cfg = default_config();
  cfg.num_rbs = 5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = default_config();
  cfg.noise_watt = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = default_config();
  cfg.d2d_max_dist_m = 1000.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = default_config();
  cfg.cu_power_cap.pop_back();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("config file loads and overrides defaults") {
  const char* path = "test_model_config.tmp";
  {
    std::ofstream out(path);
    out << "# scenario\n"
        << "num_cus = 3\n"
        << "num_d2d = 2\n"
        << "bs_antennas = 2\n"
        << "eve_antennas = 2\n"
        << "cu_power_dbm = 10\n"
        << "noise_dbm = -90  # high noise floor\n"
        << "cell_radius_m = 250\n";
  }
  const SystemConfig cfg = load_config(path);
  CHECK(cfg.num_cus == 3);
  CHECK(cfg.num_rbs == 3);
  CHECK(cfg.num_d2d == 2);
  CHECK(cfg.cu_power_cap.size() == 3);
  CHECK(cfg.cu_power_cap[1] == doctest::Approx(0.01));
  CHECK(cfg.d2d_power_cap[0] == doctest::Approx(0.1));  // default 20 dBm
  CHECK(cfg.noise_watt == doctest::Approx(1e-12));
  CHECK(cfg.cell_radius_m == 250.0);
  std::remove(path);

  {
    std::ofstream out(path);
    out << "not_a_key = 3\n";
  }
  CHECK_THROWS_AS((void)load_config(path), std::invalid_argument);
  std::remove(path);
}

TEST_CASE("topology sampling respects the geometry on many seeds") {
  SystemConfig cfg = default_config();
  cfg = with_counts(cfg, 4, 6);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    RandomStream rng(seed);
    const Topology topo = sample_topology(cfg, rng);
    REQUIRE(topo.cu_pos.size() == 4);
    REQUIRE(topo.d2d_tx_pos.size() == 6);
    REQUIRE(topo.d2d_rx_pos.size() == 6);
    CHECK(distance(topo.eve, topo.bs) <= cfg.cell_radius_m);
    for (const Point& p : topo.cu_pos) {
      CHECK(distance(p, topo.bs) <= cfg.cell_radius_m);
      CHECK(distance(p, topo.bs) >= cfg.min_link_dist_m);
      CHECK(distance(p, topo.eve) >= cfg.min_link_dist_m);
    }
    for (std::size_t n = 0; n < 6; ++n) {
      const Point& tx = topo.d2d_tx_pos[n];
      const Point& rx = topo.d2d_rx_pos[n];
      CHECK(distance(tx, topo.bs) <= cfg.cell_radius_m);
      CHECK(distance(rx, topo.bs) <= cfg.cell_radius_m);
      CHECK(distance(tx, topo.bs) >= cfg.min_link_dist_m);
      CHECK(distance(tx, topo.eve) >= cfg.min_link_dist_m);
      CHECK(distance(tx, rx) <= cfg.d2d_max_dist_m);
      CHECK(distance(tx, rx) >= cfg.min_link_dist_m);
    }
  }
}

TEST_CASE("pair distance honors a tightened maximum") {
  SystemConfig cfg = default_config();
  cfg.d2d_max_dist_m = 50.0;
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    RandomStream rng(seed);
    const Topology topo = sample_topology(cfg, rng);
    for (std::size_t n = 0; n < cfg.num_d2d; ++n) {
      CHECK(distance(topo.d2d_tx_pos[n], topo.d2d_rx_pos[n]) <= 50.0);
    }
  }
}

TEST_CASE("no D2D pairs means empty arrays") {
  const SystemConfig cfg = with_counts(default_config(), 3, 0);
  RandomStream rng(7);
  const Topology topo = sample_topology(cfg, rng);
  CHECK(topo.d2d_tx_pos.empty());
  CHECK(topo.d2d_rx_pos.empty());
  RandomStream rng2(7);
  const Topology topo2 = sample_topology(cfg, rng2);
  RandomStream rng3(7);
  const ChannelSet ch = sample_channels(cfg, topo2, rng3);
  CHECK(ch.h_nb.empty());
  CHECK(ch.h_ne.empty());
}

TEST_CASE("sampling is deterministic in the seed") {
  const SystemConfig cfg = default_config();
  RandomStream r1(42), r2(42);
  const Topology t1 = sample_topology(cfg, r1);
  const Topology t2 = sample_topology(cfg, r2);
  CHECK(t1.eve.x == t2.eve.x);
  CHECK(t1.eve.y == t2.eve.y);
  for (std::size_t m = 0; m < cfg.num_cus; ++m) {
    CHECK(t1.cu_pos[m].x == t2.cu_pos[m].x);
    CHECK(t1.cu_pos[m].y == t2.cu_pos[m].y);
  }
  const ChannelSet c1 = sample_channels(cfg, t1, r1);
  const ChannelSet c2 = sample_channels(cfg, t2, r2);
  CHECK(channels_equal(c1, c2));
}

TEST_CASE("channel shapes track the configuration") {
  for (std::size_t M : {1, 2, 3, 4, 5, 6}) {
    for (std::size_t N : {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) {
      for (std::size_t B : {1, 2, 3, 4}) {
        for (std::size_t E : {1, 2, 3, 4}) {
          SystemConfig cfg = with_counts(default_config(), M, N);
          cfg.bs_antennas = B;
          cfg.eve_antennas = E;
          RandomStream rng(1000 + M * 100 + N * 10 + B + E);
          const Topology topo = sample_topology(cfg, rng);
          const ChannelSet ch = sample_channels(cfg, topo, rng);
          REQUIRE(ch.g_mb.size() == M * M);
          REQUIRE(ch.g_me.size() == M * M);
          REQUIRE(ch.h_nb.size() == N * M);
          REQUIRE(ch.h_ne.size() == N * M);
          for (const cvec& v : ch.g_mb) {
            REQUIRE(v.size() == B);
            CHECK(sq_norm(v) > 0.0);
          }
          for (const cvec& v : ch.g_me) REQUIRE(v.size() == E);
          for (const cvec& v : ch.h_nb) REQUIRE(v.size() == B);
          for (const cvec& v : ch.h_ne) REQUIRE(v.size() == E);
        }
      }
    }
  }
}

TEST_CASE("mean channel energy follows path loss and shadowing") {
  // One CU pinned at distance d from the BS; over many draws the average
  // squared norm approaches B * d^-alpha * exp((sigma*ln10/10)^2 / 2),
  // the log-normal mean.
  SystemConfig cfg = with_counts(default_config(), 1, 0);
  cfg.bs_antennas = 4;
  const double d = 120.0;

  Topology topo;
  topo.bs = {0.0, 0.0};
  topo.eve = {30.0, 40.0};
  topo.cu_pos = {{d, 0.0}};

  RandomStream rng(2024);
  const int draws = 100000;
  double acc = 0.0;
  for (int i = 0; i < draws; ++i) {
    const ChannelSet ch = sample_channels(cfg, topo, rng);
    acc += sq_norm(ch.cu_bs(0, 0));
  }
  const double measured = acc / draws;

  const double sigma_ln = cfg.shadowing_std_db * std::log(10.0) / 10.0;
  const double expected =
      4.0 * std::pow(d, -cfg.path_loss_exponent) * std::exp(0.5 * sigma_ln * sigma_ln);
  CHECK(measured == doctest::Approx(expected).epsilon(0.05));
}
