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

#include "d2dsec/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace d2dsec {
namespace {

void check_finite(const cvec& v, const char* what) {
  for (const cd& x : v) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument(std::string("non-finite channel vector: ") + what);
    }
  }
}

}  // namespace

ReceiveFilter mmse_filter(const cvec& g, const cvec& h, double P, double q, double N0) {
  if (!(P > 0.0) || !(q >= 0.0) || !(N0 > 0.0)) {
    throw std::invalid_argument("mmse_filter: need P > 0, q >= 0, N0 > 0");
  }
  check_finite(g, "g");
  check_finite(h, "h");
  if (!h.empty() && h.size() != g.size()) {
    throw std::invalid_argument("mmse_filter: dimension mismatch between g and h");
  }

  HermitianMatrix A = HermitianMatrix::scaled_identity(g.size(), N0);
  A.add_outer(P, g);
  if (!h.empty() && q > 0.0) {
    A.add_outer(q, h);
  }
  cvec w = hpd_solve(A, g);
  const double sp = std::sqrt(P);
  for (cd& x : w) {
    x *= sp;
  }
  return {std::move(w)};
}

double sinr_bs(const ReceiveFilter& f, const cvec& g, const cvec& h, double p, double q,
               double N0) {
  const double wn = sq_norm(f.w);
  if (wn == 0.0) {
    throw std::invalid_argument("sinr_bs: zero filter");
  }
  const double sig = p * std::norm(inner(f.w, g));
  double interf = 0.0;
  if (!h.empty() && q > 0.0) {
    interf = q * std::norm(inner(f.w, h));
  }
  return sig / (interf + N0 * wn);
}

double sinr_eve_mrc(const cvec& g_me, const cvec& h_ne, double p, double q, double N0) {
  const double gn = sq_norm(g_me);
  if (gn == 0.0) {
    throw std::invalid_argument("sinr_eve_mrc: zero eavesdropper channel");
  }
  double interf = 0.0;
  if (!h_ne.empty() && q > 0.0) {
    interf = q * std::norm(inner(g_me, h_ne));
  }
  return p * gn * gn / (interf + N0 * gn);
}

LinkRates secrecy_rate(double eta, double gamma, double V, std::size_t K) {
  LinkRates r;
  r.eta = eta;
  r.gamma = gamma;
  const double diff = std::log2(1.0 + eta) - std::log2(1.0 + gamma);
  r.secrecy_rate = (V / static_cast<double>(K)) * std::max(0.0, diff);
  return r;
}

double phi_no_d2d(const cvec& g_mb, const cvec& g_me, double P, double N0, double V,
                  std::size_t K) {
  const double diff =
      std::log2(1.0 + P * sq_norm(g_mb) / N0) - std::log2(1.0 + P * sq_norm(g_me) / N0);
  return (V / static_cast<double>(K)) * std::max(0.0, diff);
}

double mmse_of_link(const ReceiveFilter& f, const cvec& g, const cvec& h, double P, double q,
                    double N0) {
  const cd detected = std::sqrt(P) * inner(f.w, g) - 1.0;
  double leak = 0.0;
  if (!h.empty() && q > 0.0) {
    leak = q * std::norm(inner(f.w, h));
  }
  return std::norm(detected) + leak + N0 * sq_norm(f.w);
}

double chi_tilde(const ReceiveFilter& f, double q, const cvec& g_mb, const cvec& g_me,
                 const cvec& h_nb, const cvec& h_ne, double P, double N0) {
  const double mmse = mmse_of_link(f, g_mb, h_nb, P, q, N0);
  const double gn = sq_norm(g_me);
  double interf = 0.0;
  if (!h_ne.empty() && q > 0.0) {
    interf = q * std::norm(inner(g_me, h_ne));
  }
  const double gamma = P * gn * gn / (interf + N0 * gn);
  return -std::log2(mmse) - std::log2(1.0 + gamma);
}

}  // namespace d2dsec
