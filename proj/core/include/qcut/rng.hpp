// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_RNG_HPP
#define QCUT_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace qcut {

// Derive an independent substream key from a root seed and a list of
// stream identifiers (fragment index, setting index, trial, ...). Uses
// splitmix64 mixing so substreams are statistically independent and the
// assignment is schedule-independent.
std::uint64_t substream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

// Deterministic random stream. Wraps mt19937_64 (whose output sequence is
// pinned by the standard) with explicit uniform/normal recipes so that
// sampled values do not depend on library internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform();
  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n);
  // Standard normal via Box-Muller.
  double normal();

  // Multinomial draw of `shots` samples from `probs` (clamped at zero and
  // renormalized); returns counts per bin.
  std::vector<std::uint64_t> multinomial(const std::vector<double>& probs, std::uint64_t shots);

  // k distinct indices from [0, n), in sorted order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace qcut

#endif
