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

#include "d2dsec/algebra.hpp"

namespace d2dsec {

// Linear receive filter at the base station for one cellular user.
struct ReceiveFilter {
  cvec w;
};

// Post-processing SINRs of one cellular link plus the resulting secrecy
// rate in bit/s: (V/K) * max(0, log2(1+eta) - log2(1+gamma)).
struct LinkRates {
  double eta = 0.0;           // SINR at the base station
  double gamma = 0.0;         // SINR at the eavesdropper
  double secrecy_rate = 0.0;  // bit/s
};

/**
 * MMSE receive filter w = sqrt(P) * (P g g^H + q h h^H + N0 I)^-1 g.
 *
 * h is the jammer channel into the base station; pass an empty vector (or
 * q = 0) when no jammer shares the RB. Requires P > 0, q >= 0, N0 > 0.
 */
ReceiveFilter mmse_filter(const cvec& g, const cvec& h, double P, double q, double N0);

// SINR after filtering at the base station:
// p |w^H g|^2 / (q |w^H h|^2 + N0 ||w||^2). Invariant to rescaling w.
double sinr_bs(const ReceiveFilter& f, const cvec& g, const cvec& h, double p, double q,
               double N0);

// SINR at the eavesdropper, which maximal-ratio combines onto the user's
// channel: p ||g_me||^4 / (q |g_me^H h_ne|^2 + N0 ||g_me||^2). The
// eavesdropper's weights stay matched to g_me; it does not adapt to the
// jammer.
double sinr_eve_mrc(const cvec& g_me, const cvec& h_ne, double p, double q, double N0);

// Per-RB secrecy rate from the two SINRs.
LinkRates secrecy_rate(double eta, double gamma, double V, std::size_t K);

// Closed-form secrecy rate of a lone CU under the MMSE filter (no jammer):
// (V/K) * [log2(1 + P||g_mb||^2/N0) - log2(1 + P||g_me||^2/N0)]^+.
double phi_no_d2d(const cvec& g_mb, const cvec& g_me, double P, double N0, double V,
                  std::size_t K);

// Mean-square detection error of the cellular link under filter w:
// |sqrt(P) w^H g - 1|^2 + q |w^H h|^2 + N0 ||w||^2. Equals 1/(1+eta) when
// w is the MMSE filter.
double mmse_of_link(const ReceiveFilter& f, const cvec& g, const cvec& h, double P, double q,
                    double N0);

/**
 * Unclamped secrecy-rate kernel of a CU/jammer pair at filter w and jammer
 * power q:
 *
 *   -log2(MMSE) - log2(1 + P||g_me||^4 / (q |g_me^H h_ne|^2 + N0 ||g_me||^2))
 *
 * May be negative; the (V/K)[.]^+ clamp is applied exactly once, when a
 * pair profit psi is formed downstream.
 */
double chi_tilde(const ReceiveFilter& f, double q, const cvec& g_mb, const cvec& g_me,
                 const cvec& h_nb, const cvec& h_ne, double P, double N0);

}  // namespace d2dsec
