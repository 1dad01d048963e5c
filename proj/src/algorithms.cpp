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

#include "d2dsec/algorithms.hpp"

#include <numeric>
#include <stdexcept>

#include "d2dsec/assignment.hpp"

namespace d2dsec {
namespace {

// Puts CU m into conventional (jammer-free) operation on RB k.
void finalize_conventional_cu(const SystemConfig& cfg, const ChannelSet& chans, std::size_t m,
                              std::size_t k, PacSolution& sol) {
  const cvec& g_mb = chans.cu_bs(m, k);
  const cvec& g_me = chans.cu_eve(m, k);
  const double P = cfg.cu_power_cap[m];
  ReceiveFilter w = mmse_filter(g_mb, cvec{}, P, 0.0, cfg.noise_watt);
  const double p = cu_power_rule(w, g_mb, g_me, cvec{}, cvec{}, 0.0, cfg.noise_watt, P);
  sol.per_cu_sr[m] =
      p > 0.0 ? phi_no_d2d(g_mb, g_me, P, cfg.noise_watt, cfg.bandwidth_hz, cfg.num_rbs) : 0.0;
  sol.cu_power[m] = p;
  sol.filters[m] = std::move(w);
  sol.d2d_of_cu[m] = -1;
}

PacSolution make_empty_solution(Scheme s, const SystemConfig& cfg) {
  PacSolution sol;
  sol.scheme = s;
  sol.rb_of_cu.assign(cfg.num_cus, 0);
  sol.d2d_of_cu.assign(cfg.num_cus, -1);
  sol.cu_power.assign(cfg.num_cus, 0.0);
  sol.d2d_power.assign(cfg.num_d2d, 0.0);
  sol.filters.assign(cfg.num_cus, ReceiveFilter{});
  sol.per_cu_sr.assign(cfg.num_cus, 0.0);
  return sol;
}

void finish_sum(PacSolution& sol) {
  sol.sum_sr = std::accumulate(sol.per_cu_sr.begin(), sol.per_cu_sr.end(), 0.0);
}

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::pac_d2d: return "pac_d2d";
    case Scheme::pac_no_d2d: return "pac_no_d2d";
    case Scheme::nod2d_random: return "nod2d_random";
    case Scheme::greedy: return "greedy";
  }
  throw std::invalid_argument("scheme_name: bad scheme");
}

Scheme parse_scheme(const std::string& name) {
  if (name == "pac_d2d") return Scheme::pac_d2d;
  if (name == "pac_no_d2d") return Scheme::pac_no_d2d;
  if (name == "nod2d_random") return Scheme::nod2d_random;
  if (name == "greedy") return Scheme::greedy;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

RealMatrix no_d2d_profit_table(const SystemConfig& cfg, const ChannelSet& chans) {
  RealMatrix phi(cfg.num_cus, cfg.num_rbs);
  for (std::size_t m = 0; m < cfg.num_cus; ++m) {
    for (std::size_t k = 0; k < cfg.num_rbs; ++k) {
      phi.at(m, k) = phi_no_d2d(chans.cu_bs(m, k), chans.cu_eve(m, k), cfg.cu_power_cap[m],
                                cfg.noise_watt, cfg.bandwidth_hz, cfg.num_rbs);
    }
  }
  return phi;
}

PacSolution pac_no_d2d(const SystemConfig& cfg, const ChannelSet& chans) {
  cfg.validate();
  PacSolution sol = make_empty_solution(Scheme::pac_no_d2d, cfg);

  const RealMatrix phi = no_d2d_profit_table(cfg, chans);
  const Assignment a = hungarian(pad_to_square(phi));
  for (std::size_t m = 0; m < cfg.num_cus; ++m) {
    sol.rb_of_cu[m] = static_cast<std::size_t>(a.col_of_row[m]);
    finalize_conventional_cu(cfg, chans, m, sol.rb_of_cu[m], sol);
  }
  finish_sum(sol);
  return sol;
}

PacSolution pac_d2d(const SystemConfig& cfg, const ChannelSet& chans) {
  cfg.validate();
  PacSolution sol = pac_no_d2d(cfg, chans);
  sol.scheme = Scheme::pac_d2d;
  if (cfg.num_d2d == 0) {
    return sol;
  }

  // Optimize every (CU, pair) combination on the CU's RB, then match.
  const std::size_t M = cfg.num_cus;
  const std::size_t N = cfg.num_d2d;
  std::vector<PairEvaluation> table;
  table.reserve(M * N);
  RealMatrix psi(M, N);
  for (std::size_t m = 0; m < M; ++m) {
    for (std::size_t n = 0; n < N; ++n) {
      PairEvaluation pe =
          optimize_pair(m, n, sol.rb_of_cu[m], chans, cfg.cu_power_cap[m], cfg.d2d_power_cap[n],
                        cfg.noise_watt, cfg.bandwidth_hz, cfg.num_rbs);
      psi.at(m, n) = pe.psi;
      sol.pair_evals += 1;
      sol.pair_iterations += pe.iterations;
      table.push_back(std::move(pe));
    }
  }

  const Assignment match = solve_matching(psi);
  for (std::size_t m = 0; m < M; ++m) {
    const int n = match.col_of_row[m];
    if (n < 0) continue;  // stays in conventional mode
    PairEvaluation& pe = table[m * N + static_cast<std::size_t>(n)];
    const std::size_t k = sol.rb_of_cu[m];
    const double p =
        cu_power_rule(pe.filter, chans.cu_bs(m, k), chans.cu_eve(m, k), chans.d2d_bs(n, k),
                      chans.d2d_eve(n, k), pe.q, cfg.noise_watt, cfg.cu_power_cap[m]);
    sol.d2d_of_cu[m] = n;
    sol.d2d_power[static_cast<std::size_t>(n)] = pe.q;
    sol.cu_power[m] = p;
    sol.per_cu_sr[m] = p > 0.0 ? pe.psi : 0.0;
    sol.filters[m] = std::move(pe.filter);
  }
  finish_sum(sol);
  return sol;
}

PacSolution baseline_random_rb(const SystemConfig& cfg, const ChannelSet& chans,
                               RandomStream& rng) {
  cfg.validate();
  PacSolution sol = make_empty_solution(Scheme::nod2d_random, cfg);

  std::vector<std::size_t> perm(cfg.num_rbs);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = cfg.num_rbs; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_u64() % i);
    std::swap(perm[i - 1], perm[j]);
  }

  for (std::size_t m = 0; m < cfg.num_cus; ++m) {
    sol.rb_of_cu[m] = perm[m];
    finalize_conventional_cu(cfg, chans, m, perm[m], sol);
  }
  finish_sum(sol);
  return sol;
}

PacSolution baseline_greedy(const SystemConfig& cfg, const ChannelSet& chans) {
  cfg.validate();
  PacSolution sol = make_empty_solution(Scheme::greedy, cfg);

  const RealMatrix phi = no_d2d_profit_table(cfg, chans);
  std::vector<bool> rb_taken(cfg.num_rbs, false);
  std::vector<bool> pair_taken(cfg.num_d2d, false);

  for (std::size_t m = 0; m < cfg.num_cus; ++m) {
    // Best remaining RB by jammer-free rate, lowest index on ties.
    std::size_t best_k = 0;
    double best_phi = -1.0;
    for (std::size_t k = 0; k < cfg.num_rbs; ++k) {
      if (!rb_taken[k] && phi.at(m, k) > best_phi) {
        best_phi = phi.at(m, k);
        best_k = k;
      }
    }
    rb_taken[best_k] = true;
    sol.rb_of_cu[m] = best_k;

    // Best remaining pair on that RB, kept only on strict improvement.
    int best_n = -1;
    PairEvaluation best_pe;
    for (std::size_t n = 0; n < cfg.num_d2d; ++n) {
      if (pair_taken[n]) continue;
      PairEvaluation pe =
          optimize_pair(m, n, best_k, chans, cfg.cu_power_cap[m], cfg.d2d_power_cap[n],
                        cfg.noise_watt, cfg.bandwidth_hz, cfg.num_rbs);
      sol.pair_evals += 1;
      sol.pair_iterations += pe.iterations;
      if (best_n < 0 || pe.psi > best_pe.psi) {
        best_n = static_cast<int>(n);
        best_pe = std::move(pe);
      }
    }

    if (best_n >= 0 && best_pe.psi > phi.at(m, best_k)) {
      pair_taken[static_cast<std::size_t>(best_n)] = true;
      const double p = cu_power_rule(best_pe.filter, chans.cu_bs(m, best_k),
                                     chans.cu_eve(m, best_k), chans.d2d_bs(best_n, best_k),
                                     chans.d2d_eve(best_n, best_k), best_pe.q, cfg.noise_watt,
                                     cfg.cu_power_cap[m]);
      sol.d2d_of_cu[m] = best_n;
      sol.d2d_power[static_cast<std::size_t>(best_n)] = best_pe.q;
      sol.cu_power[m] = p;
      sol.per_cu_sr[m] = p > 0.0 ? best_pe.psi : 0.0;
      sol.filters[m] = std::move(best_pe.filter);
    } else {
      finalize_conventional_cu(cfg, chans, m, best_k, sol);
    }
  }
  finish_sum(sol);
  return sol;
}

PacSolution run_scheme(Scheme s, const SystemConfig& cfg, const ChannelSet& chans,
                       RandomStream& rng) {
  switch (s) {
    case Scheme::pac_d2d: return pac_d2d(cfg, chans);
    case Scheme::pac_no_d2d: return pac_no_d2d(cfg, chans);
    case Scheme::nod2d_random: return baseline_random_rb(cfg, chans, rng);
    case Scheme::greedy: return baseline_greedy(cfg, chans);
  }
  throw std::invalid_argument("run_scheme: bad scheme");
}

}  // namespace d2dsec
