// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_EXPERIMENT_HPP
#define QCUT_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcut/fit.hpp"
#include "qcut/knit.hpp"
#include "qcut/noise.hpp"

namespace qcut {

// One gate-noise descriptor (serializable form of a channel constructor
// call, with an optional twirling transform applied to the built channel).
struct GateNoiseDesc {
  ChannelKind kind = ChannelKind::Depolarizing;
  ChannelParams params;
  std::string transform;  // "", "pta" or "cta"

  ChoiTensor build(int num_qubits) const;
};

struct NoisePoint {
  std::string label;
  std::optional<GateNoiseDesc> two_qubit;
  std::optional<GateNoiseDesc> one_qubit;
  double p_meas = 0.0;
  int noise_multiplicity = 1;

  NoiseSpec build() const;
  std::string params_string() const;
};

struct CircuitSpec {
  int num_qubits = 4;
  int layers = 3;
  std::uint64_t seed = 0;
  bool auto_middle_cut = true;  // two cuts around the middle layer
  CutSpec cuts;                 // used when auto_middle_cut is false
};

struct ExperimentConfig {
  std::vector<CircuitSpec> circuits;
  std::vector<NoisePoint> noise_points;
  std::uint64_t shots = 10000;
  std::vector<FitterKind> fitters = {FitterKind::Lin, FitterKind::Cls, FitterKind::MemCls};
  std::vector<bool> devt_flags = {false, true};
  std::vector<double> fractions = {1.0};
  int trials = 1;
  std::uint64_t seed = 0;
  bool include_uncut = true;
  bool timings = false;  // wall-time column breaks byte-identical output; opt-in
  int workers = 0;       // 0 = hardware concurrency (QCUT_WORKERS overrides)
  std::string output_path;

  void validate() const;
  // Number of result rows the grid will emit.
  std::size_t grid_size() const;
};

struct ResultRow {
  int num_qubits = 0;
  int num_fragments = 0;
  std::string noise_kind;
  std::string noise_params;
  std::string fitter;  // lin/cls/memcls/uncut/uncut-mem
  bool devt = false;
  double fraction = 1.0;
  int trial = 0;
  double trace_distance = 0.0;
  double pre_norm_mass = 0.0;
  double wall_time_ms = 0.0;
  bool failed = false;
  std::string error;
};

// Run the full experiment grid: per (circuit, noise, trial) collect
// fragment data once, then evaluate every (fitter, devt, fraction)
// combination plus the uncut baselines, computing the trace distance to
// the noiseless ideal distribution. Jobs run on a bounded worker pool;
// rows are ordered by grid index regardless of scheduling; all randomness
// derives from (config.seed, job index), so repeated runs are identical.
// Failures become failed rows and the run continues.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

std::string results_to_csv(const std::vector<ResultRow>& rows, bool timings = false);

// Aggregate rows into a mean/stddev summary grouped by configuration.
std::string summarize_results(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(const std::string& text);

}  // namespace qcut

#endif
