// Copyright (c) 2026 qcut developers
// SPDX-License-Identifier: Apache-2.0

#ifndef QCUT_SERIALIZE_HPP
#define QCUT_SERIALIZE_HPP

#include <string>
#include <utility>

#include "qcut/circuit.hpp"
#include "qcut/cut.hpp"
#include "qcut/experiment.hpp"
#include "qcut/fit.hpp"

namespace qcut {

// JSON document schemas are described in the repository README. Complex
// entries serialize as [re, im] pairs.

std::string circuit_to_json(const CircuitIR& circuit, const CutSpec& cuts);
std::pair<CircuitIR, CutSpec> circuit_from_json(const std::string& text);

std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);

std::string fit_result_to_json(const FitResult& result);
FitResult fit_result_from_json(const std::string& text);

std::string distribution_to_json(const OutcomeDistribution& dist);
OutcomeDistribution distribution_from_json(const std::string& text);

}  // namespace qcut

#endif
