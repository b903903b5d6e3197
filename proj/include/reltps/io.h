// Copyright 2026 The reltps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELTPS_IO_H
#define RELTPS_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "reltps/entanglement.h"
#include "reltps/sim.h"
#include "reltps/verify.h"

namespace reltps {

inline constexpr std::string_view kToolName = "reltps";
inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Raised for malformed input documents. The message names the offending field.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Complex numbers are [re, im] pairs.
Json complex_to_json(Complex z);
Json ket_to_json(const Ket4 &v);

/// Parses {"amplitudes": [[re, im] x 4], "normalize": bool}. Without
/// "normalize": true the amplitudes must already have unit norm.
StateVec parse_state_json(const Json &doc);
/// Parses the text of a state file, reporting malformed JSON as InputError.
StateVec parse_state_text(std::string_view text);

/// Deterministic report document: identical for identical reports.
Json report_to_json(const VerificationReport &report);
std::string report_to_text(const VerificationReport &report);

Json classification_to_json(const StateVec &state, const TpsClassification &classification);
Json schmidt_to_json(const LabelClassification &entry);
std::string classification_to_text(const StateVec &state, const TpsClassification &classification);
std::string schmidt_to_text(const LabelClassification &entry);

Json simulation_to_json(const ExperimentConfig &cfg, const CountsTable &counts);
std::string simulation_to_text(const ExperimentConfig &cfg, const CountsTable &counts);

/// The four subsystem projectors of a label as color sums.
Json projector_table_to_json(TpsLabel label);
std::string projector_table_to_text(TpsLabel label);

}  // namespace reltps

#endif
