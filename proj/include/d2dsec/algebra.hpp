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

#include <complex>
#include <cstddef>
#include <vector>

namespace d2dsec {

using cd = std::complex<double>;
using cvec = std::vector<cd>;

// Conjugate inner product a^H b (conjugate-linear in the first argument).
// Throws std::invalid_argument on length mismatch.
cd inner(const cvec& a, const cvec& b);

// Squared Euclidean norm, exactly real.
double sq_norm(const cvec& a);

/**
 * Small dense Hermitian matrix, stored full and row-major.
 *
 * The only matrices this project forms are sums of scaled outer products
 * plus a positive multiple of the identity, so Hermitian symmetry holds by
 * construction. Dimensions are the antenna counts (<= ~8); everything is
 * dense and direct.
 */
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static HermitianMatrix scaled_identity(std::size_t n, double s);

  // A += p * v v^H. Requires v.size() == dim().
  void add_outer(double p, const cvec& v);

  cd at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  cd& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  std::size_t dim() const { return n_; }

 private:
  std::size_t n_;
  cvec a_;
};

/**
 * Solves A x = b for Hermitian positive definite A by Cholesky
 * factorization (no inverse is ever materialized).
 *
 * Pivots within roundoff of zero are lifted onto a tiny positive floor so
 * that positive semi-definite inputs regularized by a very small diagonal
 * load (down to ~1e-16 relative to the matrix scale) still factor.
 * Decisively negative pivots signal a non-PD matrix and throw
 * std::runtime_error; non-finite input throws std::invalid_argument.
 */
cvec hpd_solve(const HermitianMatrix& A, const cvec& b);

}  // namespace d2dsec
