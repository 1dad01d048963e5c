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

#include <cstddef>
#include <string>
#include <vector>

#include "d2dsec/assignment.hpp"
#include "d2dsec/model.hpp"
#include "d2dsec/power_control.hpp"

namespace d2dsec {

enum class Scheme {
  pac_d2d,       // Hungarian RB allocation + Hungarian CU-DU matching
  pac_no_d2d,    // Hungarian RB allocation, no D2D
  nod2d_random,  // random RB permutation, no D2D
  greedy,        // per-CU greedy RB pick and greedy pair pick
};

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

/**
 * Complete allocation returned by any scheme: the RB bijection, the
 * (possibly empty) CU-to-D2D matching, final powers, filters, and secrecy
 * rates. CU powers are binary (0 or the cap); unmatched D2D transmitters
 * are silent.
 */
struct PacSolution {
  Scheme scheme = Scheme::pac_no_d2d;
  std::vector<std::size_t> rb_of_cu;  // bijection CU -> RB
  std::vector<int> d2d_of_cu;         // -1 when the CU has no partner
  std::vector<double> cu_power;       // watts
  std::vector<double> d2d_power;      // watts, indexed by D2D pair
  std::vector<ReceiveFilter> filters;
  std::vector<double> per_cu_sr;      // bit/s
  double sum_sr = 0.0;

  // Iteration bookkeeping for the pair optimizations this solution ran.
  std::size_t pair_evals = 0;
  std::size_t pair_iterations = 0;
};

// Profit table of jammer-free per-RB secrecy rates, entry (m, k).
RealMatrix no_d2d_profit_table(const SystemConfig& cfg, const ChannelSet& chans);

// Optimal RB allocation without D2D: Hungarian on the negated profit
// table, MMSE filters on the assigned RBs, binary powers.
PacSolution pac_no_d2d(const SystemConfig& cfg, const ChannelSet& chans);

/**
 * Full scheme: the RB map is fixed by the jammer-free allocation, every
 * (CU, pair) combination is optimized on the CU's RB, and the matching
 * that maximizes the summed pair profits is solved exactly. Matched CUs
 * adopt their pair's converged filter and jammer power; unmatched CUs run
 * jammer-free. With no D2D pairs configured this degenerates to
 * pac_no_d2d (with the pac_d2d tag).
 */
PacSolution pac_d2d(const SystemConfig& cfg, const ChannelSet& chans);

// Random RB permutation baseline (no D2D). The stream only feeds the
// permutation shuffle.
PacSolution baseline_random_rb(const SystemConfig& cfg, const ChannelSet& chans,
                               RandomStream& rng);

/**
 * Greedy baseline: CUs claim RBs in index order (best remaining
 * jammer-free rate), then the best remaining D2D pair on that RB; the
 * pair is skipped unless it strictly beats the jammer-free rate. Later
 * CUs pick from what is left, so this forfeits the diversity the exact
 * matchings exploit.
 */
PacSolution baseline_greedy(const SystemConfig& cfg, const ChannelSet& chans);

// Dispatch by tag; rng is only consumed by nod2d_random.
PacSolution run_scheme(Scheme s, const SystemConfig& cfg, const ChannelSet& chans,
                       RandomStream& rng);

}  // namespace d2dsec
