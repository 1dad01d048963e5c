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
#include <optional>
#include <vector>

#include "d2dsec/model.hpp"
#include "d2dsec/rates.hpp"

namespace d2dsec {

/**
 * Scalar constants that reduce the pair objective to a function of the
 * jammer power alone:
 *
 *   chi_tilde(q) = -log2(q*delta + eps) - log2(1 + vareps/(q*zeta + kappa))
 *
 * eps    = |sqrt(P) w^H g_mb - 1|^2 + N0 ||w||^2   (filter-side error floor)
 * delta  = |w^H h_nb|^2                            (jammer leakage into BS)
 * vareps = P ||g_me||^4                            (eavesdropper signal)
 * zeta   = |g_me^H h_ne|^2                         (jammer power at eve)
 * kappa  = N0 ||g_me||^2                           (eavesdropper noise)
 */
struct JammerConstants {
  double eps = 0.0;
  double delta = 0.0;
  double vareps = 0.0;
  double zeta = 0.0;
  double kappa = 0.0;
};

enum class JammerBranch {
  interior,         // stationary point inside (0, Q)
  cap,              // objective still increasing at Q
  zero,             // objective nonincreasing from 0
  degenerate_full,  // jammer invisible to the BS (delta = 0): full power
  degenerate_zero,  // jammer invisible to the eavesdropper (zeta = 0): off
};

struct JammerSolution {
  double q_star = 0.0;
  JammerBranch branch = JammerBranch::zero;
  double discriminant = 0.0;
  std::optional<double> root_pos;  // positive root of the derivative numerator
  std::optional<double> root_neg;  // negative root, kept for introspection
};

// Result of optimizing one CU/D2D pair on one RB.
struct PairEvaluation {
  std::size_t cu = 0;
  std::size_t d2d = 0;
  std::size_t rb = 0;
  ReceiveFilter filter;
  double q = 0.0;
  double chi_tilde = 0.0;
  double psi = 0.0;  // (V/K) * max(0, chi_tilde), bit/s
  std::size_t iterations = 0;
  std::vector<double> trace;  // chi_tilde after each round, nondecreasing
};

/**
 * The optimal CU power is binary: transmit at the cap when the filtered
 * uplink beats the eavesdropper's combining gain,
 *
 *   |w^H g_mb|^2 / ||g_me||^4  >  (q |w^H h_nb|^2 + N0 ||w||^2)
 *                                 / (q |g_me^H h_ne|^2 + N0 ||g_me||^2),
 *
 * and stay silent otherwise (a tie yields no positive secrecy rate, so it
 * also maps to 0). Jammer terms drop when q = 0 or the vectors are empty.
 * Compared cross-multiplied, so no division is involved.
 */
double cu_power_rule(const ReceiveFilter& f, const cvec& g_mb, const cvec& g_me,
                     const cvec& h_nb, const cvec& h_ne, double q, double N0, double P_cap);

JammerConstants jammer_constants(const ReceiveFilter& f, const cvec& g_mb, const cvec& g_me,
                                 const cvec& h_nb, const cvec& h_ne, double P, double N0);

// chi_tilde as a function of q only, rebuilt from the constants.
double chi_tilde_from_constants(const JammerConstants& c, double q);

/**
 * Closed-form maximizer of chi_tilde(q) on [0, Q_cap].
 *
 * The derivative numerator is the concave quadratic
 *   -q^2 delta zeta^2 - 2 q delta zeta kappa
 *   + eps*vareps*zeta - delta*vareps*kappa - delta*kappa^2
 * with discriminant 4*delta*vareps*zeta^2*(eps*zeta - delta*kappa). With
 * delta, zeta > 0 the maximizer is the positive root clipped to [0, Q_cap];
 * a nonpositive discriminant means the objective only decreases. The
 * degenerate cases follow the derivative directly: zeta = 0 turns the
 * jammer off, delta = 0 (with zeta > 0) saturates it at the cap.
 */
JammerSolution optimal_jammer_power(const JammerConstants& c, double Q_cap);

/**
 * Alternates the MMSE filter and the closed-form jammer power from q = 0
 * until chi_tilde stalls: |x_t - x_{t-1}| <= tol * max(1, |x_t|), or
 * max_iter rounds. Each round updates q for the current filter, then the
 * filter for the new q, so the returned filter is exactly MMSE for the
 * returned q. The first trace entry is the q = 0 starting value; the
 * trace never decreases, so the result cannot lose to the jammer-free
 * operating point.
 */
PairEvaluation optimize_pair(std::size_t m, std::size_t n, std::size_t k,
                             const ChannelSet& chans, double P, double Q, double N0, double V,
                             std::size_t K, double tol = 1e-8, std::size_t max_iter = 50);

}  // namespace d2dsec
