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

#include "d2dsec/power_control.hpp"

#include <cmath>
#include <stdexcept>

namespace d2dsec {

double cu_power_rule(const ReceiveFilter& f, const cvec& g_mb, const cvec& g_me,
                     const cvec& h_nb, const cvec& h_ne, double q, double N0, double P_cap) {
  const double wn = sq_norm(f.w);
  if (wn == 0.0) {
    throw std::invalid_argument("cu_power_rule: zero filter");
  }
  const double sig_bs = std::norm(inner(f.w, g_mb));
  const double gn = sq_norm(g_me);
  double leak_bs = 0.0;
  double leak_eve = 0.0;
  if (q > 0.0 && !h_nb.empty()) {
    leak_bs = q * std::norm(inner(f.w, h_nb));
  }
  if (q > 0.0 && !h_ne.empty()) {
    leak_eve = q * std::norm(inner(g_me, h_ne));
  }
  // sig_bs/gn^2 > (leak_bs + N0 wn)/(leak_eve + N0 gn), cross-multiplied.
  const bool transmit = sig_bs * (leak_eve + N0 * gn) > (leak_bs + N0 * wn) * gn * gn;
  return transmit ? P_cap : 0.0;
}

JammerConstants jammer_constants(const ReceiveFilter& f, const cvec& g_mb, const cvec& g_me,
                                 const cvec& h_nb, const cvec& h_ne, double P, double N0) {
  JammerConstants c;
  const cd detected = std::sqrt(P) * inner(f.w, g_mb) - 1.0;
  c.eps = std::norm(detected) + N0 * sq_norm(f.w);
  c.delta = h_nb.empty() ? 0.0 : std::norm(inner(f.w, h_nb));
  const double gn = sq_norm(g_me);
  c.vareps = P * gn * gn;
  c.zeta = h_ne.empty() ? 0.0 : std::norm(inner(g_me, h_ne));
  c.kappa = N0 * gn;
  return c;
}

double chi_tilde_from_constants(const JammerConstants& c, double q) {
  return -std::log2(q * c.delta + c.eps) -
         std::log2(1.0 + c.vareps / (q * c.zeta + c.kappa));
}

JammerSolution optimal_jammer_power(const JammerConstants& c, double Q_cap) {
  for (double x : {c.eps, c.delta, c.vareps, c.zeta, c.kappa, Q_cap}) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("optimal_jammer_power: non-finite input");
    }
  }

  JammerSolution sol;
  sol.discriminant =
      4.0 * c.delta * c.vareps * c.zeta * c.zeta * (c.eps * c.zeta - c.delta * c.kappa);

  if (c.zeta == 0.0) {
    // No path from the jammer to the eavesdropper; interference can only
    // hurt the uplink.
    sol.q_star = 0.0;
    sol.branch = JammerBranch::degenerate_zero;
    return sol;
  }
  if (c.delta == 0.0) {
    // The filter nulls the jammer, so the derivative numerator reduces to
    // eps*vareps*zeta > 0 and the objective increases over all of [0, Q].
    sol.q_star = Q_cap;
    sol.branch = JammerBranch::degenerate_full;
    return sol;
  }
  if (sol.discriminant <= 0.0) {
    sol.q_star = 0.0;
    sol.branch = JammerBranch::zero;
    return sol;
  }

  const double sqrt_disc = std::sqrt(sol.discriminant);
  const double spread = sqrt_disc / (2.0 * c.delta * c.zeta * c.zeta);
  const double base = -c.kappa / c.zeta;
  sol.root_neg = base - spread;  // always negative
  sol.root_pos = base + spread;

  const double a = *sol.root_pos;
  if (a <= 0.0) {
    sol.q_star = 0.0;
    sol.branch = JammerBranch::zero;
  } else if (a < Q_cap) {
    sol.q_star = a;
    sol.branch = JammerBranch::interior;
  } else {
    sol.q_star = Q_cap;
    sol.branch = JammerBranch::cap;
  }
  return sol;
}

PairEvaluation optimize_pair(std::size_t m, std::size_t n, std::size_t k,
                             const ChannelSet& chans, double P, double Q, double N0, double V,
                             std::size_t K, double tol, std::size_t max_iter) {
  if (!(tol > 0.0) || max_iter < 1) {
    throw std::invalid_argument("optimize_pair: need tol > 0 and max_iter >= 1");
  }
  const cvec& g_mb = chans.cu_bs(m, k);
  const cvec& g_me = chans.cu_eve(m, k);
  const cvec& h_nb = chans.d2d_bs(n, k);
  const cvec& h_ne = chans.d2d_eve(n, k);

  PairEvaluation pe;
  pe.cu = m;
  pe.d2d = n;
  pe.rb = k;

  double q = 0.0;
  ReceiveFilter w = mmse_filter(g_mb, h_nb, P, q, N0);
  double prev = chi_tilde(w, q, g_mb, g_me, h_nb, h_ne, P, N0);
  pe.trace.push_back(prev);

  for (std::size_t t = 1; t <= max_iter; ++t) {
    const JammerConstants c = jammer_constants(w, g_mb, g_me, h_nb, h_ne, P, N0);
    q = optimal_jammer_power(c, Q).q_star;
    w = mmse_filter(g_mb, h_nb, P, q, N0);
    const double cur = chi_tilde(w, q, g_mb, g_me, h_nb, h_ne, P, N0);
    pe.trace.push_back(cur);
    pe.iterations = t;
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) {
      prev = cur;
      break;
    }
    prev = cur;
  }

  pe.filter = std::move(w);
  pe.q = q;
  pe.chi_tilde = pe.trace.back();
  pe.psi = (V / static_cast<double>(K)) * std::max(0.0, pe.chi_tilde);
  return pe;
}

}  // namespace d2dsec
