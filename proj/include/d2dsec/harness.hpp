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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "d2dsec/algorithms.hpp"

namespace d2dsec {

// Swept parameter. power_dbm rewrites every CU and D2D power cap; num_cus
// keeps the network fully loaded (RB count follows); num_d2d resizes the
// pair population.
enum class SweepParam { none, power_dbm, num_cus, num_d2d };

std::string sweep_param_name(SweepParam p);

struct SweepSpec {
  SweepParam param = SweepParam::none;
  std::vector<double> values;
};

struct RunSpec {
  SystemConfig base;
  std::vector<Scheme> schemes;
  std::size_t num_topologies = 1000;
  std::uint64_t master_seed = 1;
  std::optional<SweepSpec> sweep;
};

// One (sweep value, scheme) cell of a Monte Carlo table.
struct ResultRecord {
  std::string sweep_param;
  double sweep_value = 0.0;
  Scheme scheme = Scheme::pac_no_d2d;
  double mean_sum_sr = 0.0;     // bit/s
  double std_err = 0.0;         // bit/s
  double mean_iterations = 0.0; // over pair optimizations; 0 without any
  std::size_t num_topologies = 0;
  std::uint64_t master_seed = 0;
  double wall_time_s = 0.0;
};

// Raw per-topology sums for one cell, for callers that need more than the
// aggregated record (paired statistics, distribution checks).
struct CellSamples {
  double sweep_value = 0.0;
  Scheme scheme = Scheme::pac_no_d2d;
  std::vector<double> sum_sr;
};

/**
 * Runs the Monte Carlo table. Topology t of sweep value v draws from a
 * child seed derived from (master_seed, bits(v), t), so every scheme sees
 * the same channels within a topology, results do not depend on
 * evaluation order, and repeated runs are bit-identical. Records are
 * emitted in (value-major, scheme-minor) order matching the RunSpec.
 */
std::vector<ResultRecord> run_monte_carlo(const RunSpec& spec);

// Same run, also exposing the per-topology samples per cell.
std::vector<ResultRecord> run_monte_carlo(const RunSpec& spec, std::vector<CellSamples>* samples);

// Convergence trace of one sampled (topology, CU, pair) optimization.
struct ConvergenceTrace {
  std::size_t topology = 0;
  std::size_t cu = 0;
  std::size_t d2d = 0;
  std::size_t rb = 0;
  std::size_t iterations = 0;
  std::vector<double> chi_trace;
};

// Samples pair optimizations across topologies (round-robin over the
// (m, n) grid) and returns their traces; spec.sweep is ignored.
std::vector<ConvergenceTrace> sweep_convergence(const RunSpec& spec, std::size_t pair_samples);

enum class OutputFormat { csv, json };

// CSV columns, in order: sweep_param, sweep_value, scheme, mean_sum_sr,
// std_err, mean_iterations, num_topologies, master_seed, wall_time_s.
// Numbers carry 12 significant digits. JSON is an array of objects with
// the same keys.
std::string results_to_csv(const std::vector<ResultRecord>& records);
std::string results_to_json(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> parse_results_csv(std::istream& in);

// Writes records to path ("-" = stdout). Throws on unwritable paths and
// on empty record lists.
void emit_results(const std::vector<ResultRecord>& records, OutputFormat format,
                  const std::string& path);

// CSV for convergence traces: columns topology, cu, d2d, rb, iteration,
// chi_tilde (one row per trace entry; iteration 0 is the starting point).
std::string traces_to_csv(const std::vector<ConvergenceTrace>& traces);

}  // namespace d2dsec
