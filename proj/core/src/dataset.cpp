// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#include "qcut/dataset.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcut/density.hpp"
#include "qcut/rng.hpp"

namespace qcut {

int ConditionalDataset::num_preps() const { return int(std::pow(4, k_in)); }
int ConditionalDataset::num_bases() const { return int(std::pow(3, k_out)); }

int ConditionalDataset::num_included() const {
  int count = 0;
  for (char c : included) count += (c != 0);
  return count;
}

double ConditionalDataset::frequency(int setting, int cut_outcome, int conditioning) const {
  double v = values.at(setting).at(bin_index(cut_outcome, conditioning));
  return exact() ? v : v / double(shots);
}

void ConditionalDataset::validate() const {
  if (k_in < 0 || k_out < 0 || num_conditioning < 0)
    throw std::invalid_argument("ConditionalDataset: negative shape");
  if (int(values.size()) != num_settings() || int(included.size()) != num_settings())
    throw std::invalid_argument("ConditionalDataset: setting count mismatch");
  for (int s = 0; s < num_settings(); ++s) {
    if (int(values[s].size()) != num_bins())
      throw std::invalid_argument("ConditionalDataset: bin count mismatch");
    if (!included[s]) continue;
    double total = 0.0;
    for (double v : values[s]) {
      if (v < 0.0) throw std::invalid_argument("ConditionalDataset: negative count");
      total += v;
    }
    const double expected = exact() ? 1.0 : double(shots);
    if (std::abs(total - expected) > 1e-6 * std::max(1.0, expected))
      throw std::invalid_argument("ConditionalDataset: included setting does not sum to shots");
  }
}

ConditionalDataset collect_fragment_data(const Fragment& fragment, const NoiseSpec& noise,
                                         std::uint64_t shots, std::uint64_t seed, int max_k) {
  if (std::max(fragment.k_in(), fragment.k_out()) > max_k) {
    std::ostringstream msg;
    msg << "collect_fragment_data: fragment with " << fragment.k_in() << " inputs / "
        << fragment.k_out() << " outputs exceeds the tomography bound k <= " << max_k;
    throw std::invalid_argument(msg.str());
  }
  ConditionalDataset data;
  data.k_in = fragment.k_in();
  data.k_out = fragment.k_out();
  data.num_conditioning = fragment.num_conditioning();
  data.shots = shots;
  data.seed = seed;
  data.values.assign(data.num_settings(), std::vector<double>(data.num_bins(), 0.0));
  data.included.assign(data.num_settings(), 1);

  const AssignmentMatrix a = noise.assignment();
  const int wires = fragment.num_wires();

  for (int prep = 0; prep < data.num_preps(); ++prep) {
    std::vector<int> prep_digits(fragment.k_in());
    for (int w = 0; w < fragment.k_in(); ++w) prep_digits[w] = (prep / int(std::pow(4, w))) % 4;
    for (int basis = 0; basis < data.num_bases(); ++basis) {
      std::vector<int> basis_digits(fragment.k_out());
      for (int w = 0; w < fragment.k_out(); ++w) basis_digits[w] = (basis / int(std::pow(3, w))) % 3;

      CircuitIR instance = fragment_circuit_instance(fragment, prep_digits, basis_digits);
      CMatrix rho = simulate_density_matrix(instance, noise);
      std::vector<double> probs = outcome_distribution(rho, a);

      const int setting = data.setting_index(prep, basis);
      std::vector<double> bins(data.num_bins(), 0.0);
      for (Eigen::Index idx = 0; idx < Eigen::Index(probs.size()); ++idx) {
        int o = 0, s = 0;
        for (int t = 0; t < fragment.k_out(); ++t)
          if ((idx >> fragment.cut_outputs[t]) & 1) o |= 1 << t;
        for (int t = 0; t < fragment.num_conditioning(); ++t)
          if ((idx >> fragment.conditioning_wires[t]) & 1) s |= 1 << t;
        bins[data.bin_index(o, s)] += probs[idx];
      }
      (void)wires;
      if (shots == kExactProbabilities) {
        data.values[setting] = std::move(bins);
      } else {
        auto counts = sample_counts(bins, shots, substream(seed, {std::uint64_t(setting)}));
        for (int b = 0; b < data.num_bins(); ++b) data.values[setting][b] = double(counts[b]);
      }
    }
  }
  return data;
}

ConditionalDataset subsample(const ConditionalDataset& data, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("subsample: fraction must lie in (0, 1]");
  ConditionalDataset out = data;
  if (fraction == 1.0) return out;
  const std::size_t total = std::size_t(data.num_settings());
  const std::size_t keep = std::size_t(std::ceil(fraction * double(total)));
  Rng rng(substream(seed, {total, keep}));
  auto chosen = rng.sample_without_replacement(total, keep);
  out.included.assign(total, 0);
  for (std::size_t idx : chosen) out.included[idx] = 1;
  for (std::size_t s = 0; s < total; ++s)
    if (!out.included[s]) std::fill(out.values[s].begin(), out.values[s].end(), 0.0);
  return out;
}

void write_dataset(std::ostream& os, const ConditionalDataset& data) {
  os << "qcut-dataset 1\n";
  os << "shape " << data.k_in << ' ' << data.k_out << ' ' << data.num_conditioning << '\n';
  os << "shots " << data.shots << '\n';
  os << "seed " << data.seed << '\n';
  os << "included ";
  for (char c : data.included) os << (c ? '1' : '0');
  os << '\n';
  os << std::setprecision(17);
  for (int s = 0; s < data.num_settings(); ++s)
    for (int b = 0; b < data.num_bins(); ++b)
      if (data.values[s][b] != 0.0) os << "count " << s << ' ' << b << ' ' << data.values[s][b] << '\n';
  os << "end\n";
}

ConditionalDataset read_dataset(std::istream& is) {
  std::string tag;
  int version = 0;
  is >> tag >> version;
  if (tag != "qcut-dataset" || version != 1)
    throw std::invalid_argument("read_dataset: not a qcut-dataset v1 document");
  ConditionalDataset data;
  std::string key;
  std::string mask;
  while (is >> key) {
    if (key == "shape") {
      is >> data.k_in >> data.k_out >> data.num_conditioning;
      data.values.assign(data.num_settings(), std::vector<double>(data.num_bins(), 0.0));
      data.included.assign(data.num_settings(), 1);
    } else if (key == "shots") {
      is >> data.shots;
    } else if (key == "seed") {
      is >> data.seed;
    } else if (key == "included") {
      is >> mask;
      if (int(mask.size()) != data.num_settings())
        throw std::invalid_argument("read_dataset: included mask length mismatch");
      for (int s = 0; s < data.num_settings(); ++s) data.included[s] = mask[s] == '1';
    } else if (key == "count") {
      int s = 0, b = 0;
      double v = 0.0;
      is >> s >> b >> v;
      data.values.at(s).at(b) = v;
    } else if (key == "end") {
      break;
    } else {
      throw std::invalid_argument("read_dataset: unknown record '" + key + "'");
    }
  }
  data.validate();
  return data;
}

std::string dataset_to_string(const ConditionalDataset& data) {
  std::ostringstream os;
  write_dataset(os, data);
  return os.str();
}

ConditionalDataset dataset_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_dataset(is);
}

}  // namespace qcut
