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

#include "d2dsec/harness.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace d2dsec {
namespace {

// 12 significant digits everywhere so identical runs are byte-identical.
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::uint64_t value_bits(double v) { return std::bit_cast<std::uint64_t>(v); }

SystemConfig apply_sweep(const SystemConfig& base, SweepParam param, double value) {
  switch (param) {
    case SweepParam::none:
      return base;
    case SweepParam::power_dbm: {
      SystemConfig cfg = base;
      const double p = dbm_to_watt(value);
      cfg.cu_power_cap.assign(cfg.num_cus, p);
      cfg.d2d_power_cap.assign(cfg.num_d2d, p);
      cfg.validate();
      return cfg;
    }
    case SweepParam::num_cus: {
      const auto m = static_cast<std::size_t>(value);
      if (static_cast<double>(m) != value || m < 1) {
        throw std::invalid_argument("sweep: num_cus values must be positive integers");
      }
      return with_counts(base, m, base.num_d2d);
    }
    case SweepParam::num_d2d: {
      const auto n = static_cast<std::size_t>(value);
      if (static_cast<double>(n) != value) {
        throw std::invalid_argument("sweep: num_d2d values must be nonnegative integers");
      }
      return with_counts(base, base.num_cus, n);
    }
  }
  throw std::invalid_argument("sweep: bad parameter");
}

}  // namespace

std::string sweep_param_name(SweepParam p) {
  switch (p) {
    case SweepParam::none: return "none";
    case SweepParam::power_dbm: return "power_dbm";
    case SweepParam::num_cus: return "num_cus";
    case SweepParam::num_d2d: return "num_d2d";
  }
  throw std::invalid_argument("sweep_param_name: bad parameter");
}

std::vector<ResultRecord> run_monte_carlo(const RunSpec& spec) {
  return run_monte_carlo(spec, nullptr);
}

std::vector<ResultRecord> run_monte_carlo(const RunSpec& spec, std::vector<CellSamples>* samples) {
  if (spec.num_topologies < 1) {
    throw std::invalid_argument("run_monte_carlo: num_topologies must be >= 1");
  }
  if (spec.schemes.empty()) {
    throw std::invalid_argument("run_monte_carlo: no schemes requested");
  }
  spec.base.validate();

  const SweepParam param = spec.sweep ? spec.sweep->param : SweepParam::none;
  const std::vector<double> values =
      spec.sweep ? spec.sweep->values : std::vector<double>{0.0};
  if (values.empty()) {
    throw std::invalid_argument("run_monte_carlo: empty sweep value list");
  }

  std::vector<ResultRecord> records;
  records.reserve(values.size() * spec.schemes.size());

  for (const double value : values) {
    const SystemConfig cfg = apply_sweep(spec.base, param, value);

    std::vector<std::vector<double>> sums(spec.schemes.size());
    std::vector<double> elapsed(spec.schemes.size(), 0.0);
    std::vector<std::size_t> iters(spec.schemes.size(), 0);
    std::vector<std::size_t> evals(spec.schemes.size(), 0);
    for (auto& s : sums) s.reserve(spec.num_topologies);

    for (std::size_t t = 0; t < spec.num_topologies; ++t) {
      const std::uint64_t child =
          RandomStream::derive(spec.master_seed, value_bits(value), t);
      RandomStream rng(child);
      const Topology topo = sample_topology(cfg, rng);
      const ChannelSet chans = sample_channels(cfg, topo, rng);

      for (std::size_t si = 0; si < spec.schemes.size(); ++si) {
        // Salted per-scheme stream: schemes never consume each other's draws.
        RandomStream scheme_rng(
            RandomStream::derive(child, static_cast<std::uint64_t>(spec.schemes[si]) + 1, 0));
        const auto t0 = std::chrono::steady_clock::now();
        const PacSolution sol = run_scheme(spec.schemes[si], cfg, chans, scheme_rng);
        const auto t1 = std::chrono::steady_clock::now();
        elapsed[si] += std::chrono::duration<double>(t1 - t0).count();
        sums[si].push_back(sol.sum_sr);
        iters[si] += sol.pair_iterations;
        evals[si] += sol.pair_evals;
      }
    }

    for (std::size_t si = 0; si < spec.schemes.size(); ++si) {
      ResultRecord rec;
      rec.sweep_param = sweep_param_name(param);
      rec.sweep_value = value;
      rec.scheme = spec.schemes[si];
      rec.num_topologies = spec.num_topologies;
      rec.master_seed = spec.master_seed;
      rec.wall_time_s = elapsed[si];

      double mean = 0.0;
      for (double x : sums[si]) mean += x;
      mean /= static_cast<double>(sums[si].size());
      double var = 0.0;
      for (double x : sums[si]) var += (x - mean) * (x - mean);
      const std::size_t n = sums[si].size();
      rec.mean_sum_sr = mean;
      rec.std_err = n > 1 ? std::sqrt(var / static_cast<double>(n - 1) / static_cast<double>(n))
                          : 0.0;
      rec.mean_iterations =
          evals[si] > 0 ? static_cast<double>(iters[si]) / static_cast<double>(evals[si]) : 0.0;
      records.push_back(rec);

      if (samples != nullptr) {
        samples->push_back({value, spec.schemes[si], std::move(sums[si])});
      }
    }
  }
  return records;
}

std::vector<ConvergenceTrace> sweep_convergence(const RunSpec& spec, std::size_t pair_samples) {
  spec.base.validate();
  if (spec.base.num_d2d < 1) {
    throw std::invalid_argument("sweep_convergence: need at least one D2D pair");
  }
  const SystemConfig& cfg = spec.base;
  const std::size_t per_topo = cfg.num_cus * cfg.num_d2d;

  std::vector<ConvergenceTrace> traces;
  traces.reserve(pair_samples);
  std::size_t t = 0;
  while (traces.size() < pair_samples) {
    const std::uint64_t child = RandomStream::derive(spec.master_seed, value_bits(0.0), t);
    RandomStream rng(child);
    const Topology topo = sample_topology(cfg, rng);
    const ChannelSet chans = sample_channels(cfg, topo, rng);
    const PacSolution base = pac_no_d2d(cfg, chans);

    for (std::size_t i = 0; i < per_topo && traces.size() < pair_samples; ++i) {
      const std::size_t m = i / cfg.num_d2d;
      const std::size_t n = i % cfg.num_d2d;
      PairEvaluation pe =
          optimize_pair(m, n, base.rb_of_cu[m], chans, cfg.cu_power_cap[m], cfg.d2d_power_cap[n],
                        cfg.noise_watt, cfg.bandwidth_hz, cfg.num_rbs);
      ConvergenceTrace tr;
      tr.topology = t;
      tr.cu = m;
      tr.d2d = n;
      tr.rb = base.rb_of_cu[m];
      tr.iterations = pe.iterations;
      tr.chi_trace = std::move(pe.trace);
      traces.push_back(std::move(tr));
    }
    ++t;
  }
  return traces;
}

std::string results_to_csv(const std::vector<ResultRecord>& records) {
  std::ostringstream out;
  out << "sweep_param,sweep_value,scheme,mean_sum_sr,std_err,mean_iterations,"
         "num_topologies,master_seed,wall_time_s\n";
  for (const ResultRecord& r : records) {
    out << r.sweep_param << ',' << fmt(r.sweep_value) << ',' << scheme_name(r.scheme) << ','
        << fmt(r.mean_sum_sr) << ',' << fmt(r.std_err) << ',' << fmt(r.mean_iterations) << ','
        << r.num_topologies << ',' << r.master_seed << ',' << fmt(r.wall_time_s) << '\n';
  }
  return out.str();
}

std::string results_to_json(const std::vector<ResultRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ResultRecord& r : records) {
    nlohmann::ordered_json o;
    o["sweep_param"] = r.sweep_param;
    o["sweep_value"] = r.sweep_value;
    o["scheme"] = scheme_name(r.scheme);
    o["mean_sum_sr"] = r.mean_sum_sr;
    o["std_err"] = r.std_err;
    o["mean_iterations"] = r.mean_iterations;
    o["num_topologies"] = r.num_topologies;
    o["master_seed"] = r.master_seed;
    o["wall_time_s"] = r.wall_time_s;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<ResultRecord> parse_results_csv(std::istream& in) {
  std::vector<ResultRecord> out;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("parse_results_csv: empty input");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    ResultRecord r;
    std::getline(ls, r.sweep_param, ',');
    std::getline(ls, field, ',');
    r.sweep_value = std::stod(field);
    std::getline(ls, field, ',');
    r.scheme = parse_scheme(field);
    std::getline(ls, field, ',');
    r.mean_sum_sr = std::stod(field);
    std::getline(ls, field, ',');
    r.std_err = std::stod(field);
    std::getline(ls, field, ',');
    r.mean_iterations = std::stod(field);
    std::getline(ls, field, ',');
    r.num_topologies = std::stoull(field);
    std::getline(ls, field, ',');
    r.master_seed = std::stoull(field);
    std::getline(ls, field, ',');
    r.wall_time_s = std::stod(field);
    out.push_back(std::move(r));
  }
  return out;
}

void emit_results(const std::vector<ResultRecord>& records, OutputFormat format,
                  const std::string& path) {
  if (records.empty()) {
    throw std::invalid_argument("emit_results: no records");
  }
  const std::string body =
      format == OutputFormat::csv ? results_to_csv(records) : results_to_json(records);
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("emit_results: cannot write " + path);
  }
  out << body;
}

std::string traces_to_csv(const std::vector<ConvergenceTrace>& traces) {
  std::ostringstream out;
  out << "topology,cu,d2d,rb,iteration,chi_tilde\n";
  for (const ConvergenceTrace& tr : traces) {
    for (std::size_t i = 0; i < tr.chi_trace.size(); ++i) {
      out << tr.topology << ',' << tr.cu << ',' << tr.d2d << ',' << tr.rb << ',' << i << ','
          << fmt(tr.chi_trace[i]) << '\n';
    }
  }
  return out.str();
}

}  // namespace d2dsec
