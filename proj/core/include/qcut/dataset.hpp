// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_DATASET_HPP
#define QCUT_DATASET_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcut/cut.hpp"
#include "qcut/noise.hpp"

namespace qcut {

// Shots sentinel: exact-probability mode (counts replaced by exact
// outcome probabilities).
inline constexpr std::uint64_t kExactProbabilities = 0;

// Tomography counts for one fragment, keyed by
// (preparation tuple, measurement basis tuple, cut outcome bits,
// conditioning bits). Settings can be masked out for partial-data fits.
struct ConditionalDataset {
  int k_in = 0;
  int k_out = 0;
  int num_conditioning = 0;
  std::uint64_t shots = kExactProbabilities;  // per included setting
  std::uint64_t seed = 0;

  // values[setting][bin]: setting = prep * 3^k_out + basis;
  // bin = cut outcome bits o | (conditioning bits s << k_out).
  // Holds counts (sampled mode) or probabilities (exact mode).
  std::vector<std::vector<double>> values;
  std::vector<char> included;  // per-setting mask

  int num_preps() const;
  int num_bases() const;
  int num_settings() const { return num_preps() * num_bases(); }
  int num_bins() const { return 1 << (k_out + num_conditioning); }
  int num_blocks() const { return 1 << num_conditioning; }
  int setting_index(int prep, int basis) const { return prep * num_bases() + basis; }
  int bin_index(int cut_outcome, int conditioning) const {
    return cut_outcome | (conditioning << k_out);
  }
  bool exact() const { return shots == kExactProbabilities; }
  int num_included() const;

  // Frequency estimate p(o, s | setting); exact mode returns the stored
  // probability.
  double frequency(int setting, int cut_outcome, int conditioning) const;

  void validate() const;
};

// Run all 4^k_in * 3^k_out tomography settings of a fragment under the
// noise model. In sampled mode each setting draws `shots` counts from a
// substream keyed by (seed, setting index); exact mode stores the full
// outcome distribution. Rejects fragments with max(k_in, k_out) > max_k.
ConditionalDataset collect_fragment_data(const Fragment& fragment, const NoiseSpec& noise,
                                         std::uint64_t shots, std::uint64_t seed,
                                         int max_k = 2);

// Keep ceil(f * settings) settings chosen uniformly without replacement;
// excluded settings drop their counts. f in (0, 1].
ConditionalDataset subsample(const ConditionalDataset& data, double fraction,
                             std::uint64_t seed);

// Line-oriented text format for caching and replay.
void write_dataset(std::ostream& out, const ConditionalDataset& data);
ConditionalDataset read_dataset(std::istream& in);
std::string dataset_to_string(const ConditionalDataset& data);
ConditionalDataset dataset_from_string(const std::string& text);

}  // namespace qcut

#endif
