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

#ifndef RELTPS_SIM_H
#define RELTPS_SIM_H

#include <array>
#include <cstdint>

#include "reltps/linalg.h"
#include "reltps/tps.h"

namespace reltps {

/// Born-rule model of the four-channel decay: the detectors are wired
/// according to `label`, and each shot yields the outcome bits (alpha, beta).
struct ExperimentConfig {
    StateVec state;
    TpsLabel label;
    uint64_t shots;
    uint64_t seed;
};

struct CountsTable {
    /// n_ab at index 2a + b.
    std::array<uint64_t, 4> joint{};
    uint64_t shots = 0;
    /// Row and column sums of `joint`.
    std::array<uint64_t, 2> left_marginal{};
    std::array<uint64_t, 2> right_marginal{};

    double joint_frequency(int a, int b) const;
    double left_frequency(int a) const;
    double right_frequency(int b) const;
    /// (n_00 + n_11) / shots
    double iff_frequency() const;
};

struct CorrelationStats {
    double iff_freq;
    double xor_freq;
    /// Frequency of outcome 0 on each side.
    double left_bias;
    double right_bias;
};

/// p_ab = |<ab_label|psi>|^2, indexed 2a + b.
std::array<double, 4> analytic_probs(const StateVec &state, TpsLabel label);

/// `shots` independent inverse-CDF draws from analytic_probs, from a
/// generator seeded with cfg.seed. Throws std::invalid_argument on zero shots.
CountsTable sample_counts(const ExperimentConfig &cfg);

CorrelationStats correlation_stats(const CountsTable &counts);

}  // namespace reltps

#endif
