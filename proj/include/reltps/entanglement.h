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

#ifndef RELTPS_ENTANGLEMENT_H
#define RELTPS_ENTANGLEMENT_H

#include <array>
#include <string_view>

#include "reltps/linalg.h"
#include "reltps/tps.h"

namespace reltps {

/// Second Schmidt coefficient below this means product (rank 1).
inline constexpr double kRankThreshold = 1e-8;

/// Schmidt data of a state relative to one tensor product structure.
///
/// psi = sum_k coefficients[k] * tensor_ket(label, left_basis[k], right_basis[k]).
/// The first non-negligible component of each left vector is real positive.
struct SchmidtDecomposition {
    TpsLabel label;
    std::array<double, 2> coefficients;
    std::array<Ket2, 2> left_basis;
    std::array<Ket2, 2> right_basis;
    int rank;
    /// Second coefficient within a factor of ten of kRankThreshold.
    bool near_degenerate;

    Ket4 reconstruct() const;
};

enum class Separability : uint8_t { Product, Entangled };

std::string_view separability_name(Separability s);

struct LabelClassification {
    TpsLabel label;
    Separability separability;
    SchmidtDecomposition schmidt;
};

/// One entry per label, in kAllLabels order.
struct TpsClassification {
    std::array<LabelClassification, 6> entries;

    const LabelClassification &at(TpsLabel label) const {
        return entries[static_cast<size_t>(label)];
    }
};

/// Entry (r, s) is <rs_label|psi>.
Matrix2 coefficient_matrix(const StateVec &psi, TpsLabel label);

SchmidtDecomposition schmidt(const StateVec &psi, TpsLabel label);

TpsClassification classify_all(const StateVec &psi);

/// tr(rho_side^2) for the reduced state on one side of the label's product,
/// computed by partial trace rather than through the Schmidt route.
double reduced_purity(const StateVec &psi, TpsLabel label, Side side);

}  // namespace reltps

#endif
