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

#include "doctest.h"
#include "support/oracles.hpp"

using namespace d2dsec;
using test::random_cvec;

TEST_CASE("inner product examples") {
  const cd i{0.0, 1.0};
  CHECK(inner({1.0, i}, {1.0, i}) == cd{2.0, 0.0});
  CHECK(inner({1.0, 0.0}, {0.0, 1.0}) == cd{0.0, 0.0});
  // Conjugation sits on the first argument.
  CHECK(inner({i}, {cd{1.0, 0.0}}) == cd{0.0, -1.0});
  CHECK_THROWS_AS((void)inner({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("inner product conjugate symmetry on random inputs") {
  RandomStream rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.next_u64() % 8;
    const cvec a = random_cvec(rng, n);
    const cvec b = random_cvec(rng, n);
    const cd ab = inner(a, b);
    const cd ba = inner(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
  }
}

TEST_CASE("squared norm") {
  CHECK(sq_norm({3.0, cd{0.0, 4.0}}) == doctest::Approx(25.0));
  CHECK(sq_norm({0.0, 0.0, 0.0}) == 0.0);
  CHECK(sq_norm({cd{0.0, 0.0}, cd{1.0, 0.0}}) == 1.0);
  // The imaginary residue of inner(a, a) is zero by construction.
  RandomStream rng(12);
  const cvec a = random_cvec(rng, 6);
  CHECK(std::abs(inner(a, a).imag()) <= 1e-14);
  CHECK(sq_norm(a) == doctest::Approx(inner(a, a).real()));
}

TEST_CASE("hpd_solve diagonal and rank-one examples") {
  // 2 I x = (4, 2i)  ->  x = (2, i)
  const HermitianMatrix A = HermitianMatrix::scaled_identity(2, 2.0);
  const cvec x = hpd_solve(A, {4.0, cd{0.0, 2.0}});
  CHECK(std::abs(x[0] - cd{2.0, 0.0}) < 1e-12);
  CHECK(std::abs(x[1] - cd{0.0, 1.0}) < 1e-12);

  // (I + e1 e1^H) e1 = 2 e1  ->  solve gives e1 / 2.
  HermitianMatrix B = HermitianMatrix::scaled_identity(3, 1.0);
  B.add_outer(1.0, {1.0, 0.0, 0.0});
  const cvec y = hpd_solve(B, {1.0, 0.0, 0.0});
  CHECK(std::abs(y[0] - cd{0.5, 0.0}) < 1e-12);
  CHECK(std::abs(y[1]) < 1e-12);
  CHECK(std::abs(y[2]) < 1e-12);
}

TEST_CASE("hpd_solve residual on random 4x4 HPD systems") {
  RandomStream rng(13);
  for (int t = 0; t < 200; ++t) {
    HermitianMatrix A = HermitianMatrix::scaled_identity(4, 0.5 + rng.uniform());
    for (int r = 0; r < 6; ++r) {
      A.add_outer(0.1 + rng.uniform(), random_cvec(rng, 4));
    }
    const cvec b = random_cvec(rng, 4);
    const cvec x = hpd_solve(A, b);

    // Multiply back and compare.
    cvec r(4);
    for (std::size_t i = 0; i < 4; ++i) {
      cd s{};
      for (std::size_t j = 0; j < 4; ++j) s += A.at(i, j) * x[j];
      r[i] = s - b[i];
    }
    CHECK(std::sqrt(sq_norm(r)) <= 1e-10 * std::sqrt(sq_norm(b)));
  }
}

TEST_CASE("hpd_solve succeeds down to vanishing diagonal load") {
  RandomStream rng(14);
  for (double n0 : {1e-16, 1e-12, 1e-8, 1e-4, 1.0}) {
    for (int t = 0; t < 50; ++t) {
      const std::size_t dim = 2 + rng.next_u64() % 4;
      const std::size_t terms = 1 + rng.next_u64() % 3;  // may be rank deficient
      HermitianMatrix A = HermitianMatrix::scaled_identity(dim, n0);
      cvec first;
      for (std::size_t r = 0; r < terms; ++r) {
        const cvec v = random_cvec(rng, dim);
        if (r == 0) first = v;
        A.add_outer(0.2 + rng.uniform(), v);
      }
      const cvec x = hpd_solve(A, first);
      for (const cd& xi : x) {
        CHECK(std::isfinite(xi.real()));
        CHECK(std::isfinite(xi.imag()));
      }
    }
  }
}

TEST_CASE("hpd_solve keeps rank-one-updated identities aligned") {
  // For A = P g g^H + N0 I, the solution of A x = g stays parallel to g.
  RandomStream rng(15);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.next_u64() % 8;
    const cvec g = random_cvec(rng, n);
    const double P = std::exp(rng.uniform(-2.0, 2.0));
    const double N0 = std::exp(rng.uniform(-6.0, 0.0));
    HermitianMatrix A = HermitianMatrix::scaled_identity(n, N0);
    A.add_outer(P, g);
    const cvec x = hpd_solve(A, g);

    // Cross-component error of x against g, normalized.
    const cd scale = inner(g, x) / inner(g, g);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      err += std::norm(x[i] - scale * g[i]);
    }
    CHECK(std::sqrt(err) <= 1e-10 * std::sqrt(sq_norm(x)));
  }
}

TEST_CASE("hpd_solve rejects bad input") {
  HermitianMatrix A = HermitianMatrix::scaled_identity(2, 1.0);
  CHECK_THROWS_AS((void)hpd_solve(A, cvec(3, cd{})), std::invalid_argument);

  HermitianMatrix nan_mat = HermitianMatrix::scaled_identity(2, 1.0);
  nan_mat.at(0, 0) = std::nan("");
  CHECK_THROWS_AS((void)hpd_solve(nan_mat, cvec(2, cd{1.0})), std::invalid_argument);

  // Indefinite matrix: breakdown must be reported, not silently "solved".
  HermitianMatrix indef = HermitianMatrix::scaled_identity(2, -1.0);
  CHECK_THROWS_AS((void)hpd_solve(indef, cvec(2, cd{1.0})), std::runtime_error);
}
