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

// Command line front end. Subcommands:
//   run          one Monte Carlo cell at the configured parameters
//   convergence  per-iteration traces of the pair optimization
//   sweep-power  sum secrecy rate vs. the transmit power cap (dBm)
//   sweep-cus    sum secrecy rate vs. the number of CUs (fully loaded)
//   sweep-d2d    sum secrecy rate vs. the number of D2D pairs
//   selftest     quick oracle checks of the optimization kernels

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d2dsec/assignment.hpp"
#include "d2dsec/harness.hpp"

namespace {

using namespace d2dsec;

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 1;
  std::size_t topologies = 1000;
  std::string schemes = "pac_d2d,pac_no_d2d,nod2d_random,greedy";
  std::string out = "-";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "Config file (key = value schema; see README)");
  cmd->add_option("--seed", o.seed, "Master seed for topology/channel sampling");
  cmd->add_option("--topologies", o.topologies, "Topologies to average over");
  cmd->add_option("--schemes", o.schemes, "Comma-separated scheme list");
  cmd->add_option("--out", o.out, "Output path, '-' for stdout");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

RunSpec make_spec(const CommonOpts& o) {
  RunSpec spec;
  spec.base = o.config_path.empty() ? default_config() : load_config(o.config_path);
  spec.master_seed = o.seed;
  spec.num_topologies = o.topologies;
  std::stringstream ss(o.schemes);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    if (!tag.empty()) spec.schemes.push_back(parse_scheme(tag));
  }
  return spec;
}

void write_text(const std::string& body, const std::string& path) {
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

int run_sweep(const CommonOpts& o, SweepParam param, const std::vector<double>& values) {
  RunSpec spec = make_spec(o);
  if (param != SweepParam::none) {
    spec.sweep = SweepSpec{param, values};
  }
  const auto records = run_monte_carlo(spec);
  emit_results(records, o.format == "json" ? OutputFormat::json : OutputFormat::csv, o.out);
  return 0;
}

int run_convergence(const CommonOpts& o, std::size_t samples) {
  RunSpec spec = make_spec(o);
  const auto traces = sweep_convergence(spec, samples);
  write_text(traces_to_csv(traces), o.out);
  return 0;
}

// ---- selftest ----------------------------------------------------------
// Small, self-contained oracle suites; the full versions live in the test
// tree. Each check prints one line and the command exits nonzero on any
// failure.

bool selftest_assignment(RandomStream& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 5);
    RealMatrix cost(n, n);
    for (double& x : cost.v) x = rng.uniform(-5.0, 5.0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += cost.at(r, perm[r]);
      best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (hungarian(cost).total != best) return false;
  }
  return true;
}

bool selftest_jammer_power(RandomStream& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    JammerConstants c;
    c.eps = std::exp(rng.uniform(-3.0, 3.0));
    c.delta = std::exp(rng.uniform(-3.0, 3.0));
    c.vareps = std::exp(rng.uniform(-3.0, 3.0));
    c.zeta = std::exp(rng.uniform(-3.0, 3.0));
    c.kappa = std::exp(rng.uniform(-3.0, 3.0));
    const double Q = std::exp(rng.uniform(-2.0, 3.0));
    const double star = chi_tilde_from_constants(c, optimal_jammer_power(c, Q).q_star);
    for (int i = 0; i <= 10000; ++i) {
      const double q = Q * static_cast<double>(i) / 10000.0;
      if (chi_tilde_from_constants(c, q) > star + 1e-6) return false;
    }
  }
  return true;
}

bool selftest_mmse_identity(RandomStream& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t B = 1 + static_cast<std::size_t>(rng.next_u64() % 8);
    cvec g(B), h(B);
    for (auto& x : g) x = rng.cgauss();
    for (auto& x : h) x = rng.cgauss();
    const double P = std::exp(rng.uniform(-2.0, 2.0));
    const double q = std::exp(rng.uniform(-2.0, 2.0));
    const double N0 = std::exp(rng.uniform(-4.0, 0.0));
    const ReceiveFilter w = mmse_filter(g, h, P, q, N0);
    const double prod = mmse_of_link(w, g, h, P, q, N0) * (1.0 + sinr_bs(w, g, h, P, q, N0));
    if (std::abs(prod - 1.0) > 1e-9) return false;
  }
  return true;
}

int run_selftest() {
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    if (!ok) ++failures;
  };
  RandomStream rng(0xd2d5ecull);
  report("assignment vs exhaustive permutations", selftest_assignment(rng));
  report("jammer power vs grid search", selftest_jammer_power(rng));
  report("mmse/sinr product identity", selftest_mmse_identity(rng));
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum secrecy-rate simulator for a D2D underlaid cellular uplink"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<double> power_values{0, 5, 10, 15, 20, 25, 30, 35};
  std::vector<double> cu_values{2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> d2d_values{2, 4, 6, 8, 10};
  std::size_t samples = 200;

  auto* cmd_run = app.add_subcommand("run", "Single Monte Carlo cell");
  add_common(cmd_run, o);

  auto* cmd_conv = app.add_subcommand("convergence", "Pair-optimization traces");
  add_common(cmd_conv, o);
  cmd_conv->add_option("--samples", samples, "Number of (topology, pair) traces");

  auto* cmd_pow = app.add_subcommand("sweep-power", "Sweep the power cap (dBm)");
  add_common(cmd_pow, o);
  cmd_pow->add_option("--values", power_values, "dBm grid");

  auto* cmd_cus = app.add_subcommand("sweep-cus", "Sweep the number of CUs");
  add_common(cmd_cus, o);
  cmd_cus->add_option("--values", cu_values, "CU counts");

  auto* cmd_d2d = app.add_subcommand("sweep-d2d", "Sweep the number of D2D pairs");
  add_common(cmd_d2d, o);
  cmd_d2d->add_option("--values", d2d_values, "D2D pair counts");

  app.add_subcommand("selftest", "Quick oracle checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) return run_sweep(o, SweepParam::none, {});
    if (cmd_conv->parsed()) return run_convergence(o, samples);
    if (cmd_pow->parsed()) return run_sweep(o, SweepParam::power_dbm, power_values);
    if (cmd_cus->parsed()) return run_sweep(o, SweepParam::num_cus, cu_values);
    if (cmd_d2d->parsed()) return run_sweep(o, SweepParam::num_d2d, d2d_values);
    return run_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
