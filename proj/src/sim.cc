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

#include "reltps/sim.h"

#include <stdexcept>

#include "reltps/states.h"

namespace reltps {

double CountsTable::joint_frequency(int a, int b) const {
    return static_cast<double>(joint[2 * a + b]) / static_cast<double>(shots);
}

double CountsTable::left_frequency(int a) const {
    return static_cast<double>(left_marginal[a]) / static_cast<double>(shots);
}

double CountsTable::right_frequency(int b) const {
    return static_cast<double>(right_marginal[b]) / static_cast<double>(shots);
}

double CountsTable::iff_frequency() const {
    return static_cast<double>(joint[0] + joint[3]) / static_cast<double>(shots);
}

std::array<double, 4> analytic_probs(const StateVec &state, TpsLabel label) {
    std::array<double, 4> p{};
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            p[2 * a + b] = std::norm(inner(basis_ket(label, a, b).ket(), state.ket()));
        }
    }
    return p;
}

CountsTable sample_counts(const ExperimentConfig &cfg) {
    if (cfg.shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    auto p = analytic_probs(cfg.state, cfg.label);
    double total = p[0] + p[1] + p[2] + p[3];

    // Only outcomes with nonzero probability take part in the CDF, so rounding
    // in the cumulative sums can never select an impossible outcome.
    std::array<int, 4> outcome{};
    std::array<double, 4> cdf{};
    int n = 0;
    double running = 0;
    for (int k = 0; k < 4; k++) {
        if (p[k] > 0) {
            running += p[k] / total;
            outcome[n] = k;
            cdf[n] = running;
            n++;
        }
    }

    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    CountsTable counts;
    counts.shots = cfg.shots;
    for (uint64_t shot = 0; shot < cfg.shots; shot++) {
        double u = uniform(rng);
        int pick = n - 1;
        for (int j = 0; j + 1 < n; j++) {
            if (u < cdf[j]) {
                pick = j;
                break;
            }
        }
        counts.joint[outcome[pick]]++;
    }
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            counts.left_marginal[a] += counts.joint[2 * a + b];
            counts.right_marginal[b] += counts.joint[2 * a + b];
        }
    }
    return counts;
}

CorrelationStats correlation_stats(const CountsTable &counts) {
    CorrelationStats out{};
    out.iff_freq = counts.iff_frequency();
    out.xor_freq = 1 - out.iff_freq;
    out.left_bias = counts.left_frequency(0);
    out.right_bias = counts.right_frequency(0);
    return out;
}

}  // namespace reltps
