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
#include <vector>

namespace d2dsec {

// Dense row-major real matrix; holds costs or profits depending on use.
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> v;

  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), v(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

// A (possibly partial) injective row-to-column matching. col_of_row holds
// -1 for unmatched rows; total is the sum of selected entries (cost for
// hungarian(), profit for solve_matching()).
struct Assignment {
  std::vector<int> col_of_row;
  double total = 0.0;
};

/**
 * Exact minimum-cost perfect matching on a square cost matrix, the
 * O(n^3) potential/augmenting-path form of the Hungarian method.
 *
 * Deterministic: rows are inserted in index order and column ties resolve
 * to the lowest index, so repeated runs give the same matching. Throws on
 * non-square or non-finite input.
 */
Assignment hungarian(const RealMatrix& cost);

/**
 * Casts a rectangular profit matrix to square cost form: appends all-zero
 * profit rows (R < C) or columns (R > C), then negates. Matches landing in
 * the padding decode as "unmatched".
 */
RealMatrix pad_to_square(const RealMatrix& profit);

/**
 * Maximizes total profit over injective partial matchings of an R x C
 * profit matrix (entries are expected nonnegative; they are secrecy-rate
 * profits clamped upstream). Matches with zero profit are reported
 * unmatched, which leaves the optimal value unchanged.
 */
Assignment solve_matching(const RealMatrix& profit);

}  // namespace d2dsec
