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

#include "d2dsec/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace d2dsec {

Assignment hungarian(const RealMatrix& cost) {
  if (cost.rows != cost.cols) {
    throw std::invalid_argument("hungarian: cost matrix must be square");
  }
  for (double x : cost.v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("hungarian: non-finite cost entry");
    }
  }
  const std::size_t n = cost.rows;
  const double inf = std::numeric_limits<double>::infinity();

  // Potentials u (rows) and v (columns); p[j] is the row matched to
  // column j, with index 0 as the virtual unmatched slot. Rows enter in
  // index order and each augmenting search scans columns in index order
  // with a strict '<', which fixes the tie-breaking.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.col_of_row.assign(n, -1);
  for (std::size_t j = 1; j <= n; ++j) {
    out.col_of_row[p[j] - 1] = static_cast<int>(j - 1);
  }
  for (std::size_t r = 0; r < n; ++r) {
    out.total += cost.at(r, static_cast<std::size_t>(out.col_of_row[r]));
  }
  return out;
}

RealMatrix pad_to_square(const RealMatrix& profit) {
  const std::size_t n = std::max(profit.rows, profit.cols);
  RealMatrix cost(n, n, 0.0);
  for (std::size_t r = 0; r < profit.rows; ++r) {
    for (std::size_t c = 0; c < profit.cols; ++c) {
      const double x = profit.at(r, c);
      if (!std::isfinite(x)) {
        throw std::invalid_argument("pad_to_square: non-finite profit entry");
      }
      cost.at(r, c) = -x;
    }
  }
  return cost;
}

Assignment solve_matching(const RealMatrix& profit) {
  Assignment out;
  out.col_of_row.assign(profit.rows, -1);
  if (profit.rows == 0 || profit.cols == 0) {
    return out;
  }
  const Assignment square = hungarian(pad_to_square(profit));
  for (std::size_t r = 0; r < profit.rows; ++r) {
    const int c = square.col_of_row[r];
    if (c >= 0 && static_cast<std::size_t>(c) < profit.cols &&
        profit.at(r, static_cast<std::size_t>(c)) > 0.0) {
      out.col_of_row[r] = c;
      out.total += profit.at(r, static_cast<std::size_t>(c));
    }
  }
  return out;
}

}  // namespace d2dsec
