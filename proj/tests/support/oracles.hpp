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

// Test-only reference implementations. Everything here is deliberately
// independent of the library's solve/optimize paths: brute-force
// enumeration, Gauss-Jordan elimination, power iteration, and plain grid
// search, used to pin expected values.

#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "d2dsec/algebra.hpp"
#include "d2dsec/assignment.hpp"
#include "d2dsec/random.hpp"

namespace d2dsec::test {

// Minimum assignment cost over all row->column permutations.
inline double brute_force_min_assignment(const RealMatrix& cost) {
  const std::size_t n = cost.rows;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += cost.at(r, perm[r]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Maximum total profit over all injective partial matchings, by depth-first
// enumeration (each row skips or takes a free column).
inline double brute_force_best_partial(const RealMatrix& profit) {
  std::vector<bool> used(profit.cols, false);
  std::function<double(std::size_t)> go = [&](std::size_t r) -> double {
    if (r == profit.rows) return 0.0;
    double best = go(r + 1);  // leave row r unmatched
    for (std::size_t c = 0; c < profit.cols; ++c) {
      if (used[c]) continue;
      used[c] = true;
      best = std::max(best, profit.at(r, c) + go(r + 1));
      used[c] = false;
    }
    return best;
  };
  return go(0);
}

// Dense complex inverse by Gauss-Jordan with partial pivoting (row-major).
inline std::vector<cd> gj_inverse(std::vector<cd> a, std::size_t n) {
  std::vector<cd> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (std::abs(a[piv * n + col]) == 0.0) throw std::runtime_error("gj_inverse: singular");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[piv * n + c], a[col * n + c]);
        std::swap(inv[piv * n + c], inv[col * n + c]);
      }
    }
    const cd d = a[col * n + col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col * n + c] /= d;
      inv[col * n + c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cd f = a[r * n + col];
      if (f == cd{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r * n + c] -= f * a[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return inv;
}

inline cvec mat_vec(const std::vector<cd>& a, const cvec& x, std::size_t n) {
  cvec y(n);
  for (std::size_t r = 0; r < n; ++r) {
    cd s{};
    for (std::size_t c = 0; c < n; ++c) s += a[r * n + c] * x[c];
    y[r] = s;
  }
  return y;
}

// Dominant eigenvalue of a general complex matrix by power iteration with
// Rayleigh-quotient readout.
inline double power_iteration_lambda_max(const std::vector<cd>& a, std::size_t n,
                                         RandomStream& rng, int iters = 2000) {
  cvec x(n);
  for (auto& v : x) v = rng.cgauss();
  for (int i = 0; i < iters; ++i) {
    cvec y = mat_vec(a, x, n);
    const double nrm = std::sqrt(sq_norm(y));
    if (nrm == 0.0) return 0.0;
    for (auto& v : y) v /= nrm;
    x = std::move(y);
  }
  const cvec ax = mat_vec(a, x, n);
  return (inner(x, ax) / inner(x, x)).real();
}

// Argmax of f over an inclusive uniform grid on [lo, hi].
struct GridMax {
  double x = 0.0;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

inline GridMax grid_argmax(const std::function<double(double)>& f, double lo, double hi,
                           std::size_t points) {
  GridMax best;
  for (std::size_t i = 0; i <= points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points);
    const double v = f(x);
    if (v > best.value) {
      best = {x, v, i};
    }
  }
  return best;
}

inline cvec random_cvec(RandomStream& rng, std::size_t n) {
  cvec v(n);
  for (auto& x : v) x = rng.cgauss();
  return v;
}

}  // namespace d2dsec::test
