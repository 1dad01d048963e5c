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

#include "d2dsec/algebra.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace d2dsec {

cd inner(const cvec& a, const cvec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner: length mismatch");
  }
  cd s{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::conj(a[i]) * b[i];
  }
  return s;
}

double sq_norm(const cvec& a) {
  double s = 0.0;
  for (const cd& x : a) {
    s += std::norm(x);
  }
  return s;
}

HermitianMatrix HermitianMatrix::scaled_identity(std::size_t n, double s) {
  HermitianMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = s;
  }
  return m;
}

void HermitianMatrix::add_outer(double p, const cvec& v) {
  if (v.size() != n_) {
    throw std::invalid_argument("add_outer: dimension mismatch");
  }
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      at(r, c) += p * v[r] * std::conj(v[c]);
    }
  }
}

cvec hpd_solve(const HermitianMatrix& A, const cvec& b) {
  const std::size_t n = A.dim();
  if (b.size() != n) {
    throw std::invalid_argument("hpd_solve: dimension mismatch");
  }

  // Copy the lower triangle; the factorization overwrites it with L.
  cvec L(n * n);
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      const cd x = A.at(r, c);
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
        throw std::invalid_argument("hpd_solve: non-finite matrix entry");
      }
      L[r * n + c] = x;
    }
    scale = std::max(scale, std::abs(A.at(r, r).real()));
  }
  for (const cd& x : b) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument("hpd_solve: non-finite rhs entry");
    }
  }

  const double eps = std::numeric_limits<double>::epsilon();
  const double floor = eps * scale;
  const double reject = 64.0 * static_cast<double>(n + 1) * eps * scale;

  // Lower Cholesky, A = L L^H.
  for (std::size_t k = 0; k < n; ++k) {
    double piv = L[k * n + k].real();
    for (std::size_t j = 0; j < k; ++j) {
      piv -= std::norm(L[k * n + j]);
    }
    if (!(piv > -reject)) {
      throw std::runtime_error("hpd_solve: factorization breakdown (matrix not positive definite)");
    }
    piv = std::max(piv, floor);
    const double d = std::sqrt(piv);
    L[k * n + k] = d;
    for (std::size_t i = k + 1; i < n; ++i) {
      cd s = L[i * n + k];
      for (std::size_t j = 0; j < k; ++j) {
        s -= L[i * n + j] * std::conj(L[k * n + j]);
      }
      L[i * n + k] = s / d;
    }
  }

  // Forward substitution L y = b, then backward L^H x = y.
  cvec x(b);
  for (std::size_t i = 0; i < n; ++i) {
    cd s = x[i];
    for (std::size_t j = 0; j < i; ++j) {
      s -= L[i * n + j] * x[j];
    }
    x[i] = s / L[i * n + i].real();
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cd s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) {
      s -= std::conj(L[j * n + ii]) * x[j];
    }
    x[ii] = s / L[ii * n + ii].real();
  }
  return x;
}

}  // namespace d2dsec
