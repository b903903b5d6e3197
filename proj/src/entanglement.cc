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

#include "reltps/entanglement.h"

namespace reltps {

namespace {

constexpr double kPhaseComponentFloor = 1e-12;

Ket2 conj(const Ket2 &v) {
    return Ket2{{std::conj(v[0]), std::conj(v[1])}};
}

}  // namespace

std::string_view separability_name(Separability s) {
    return s == Separability::Product ? "product" : "entangled";
}

Ket4 SchmidtDecomposition::reconstruct() const {
    Ket4 out;
    for (size_t k = 0; k < 2; k++) {
        out = out + tensor_ket(label, left_basis[k], right_basis[k]) * coefficients[k];
    }
    return out;
}

Matrix2 coefficient_matrix(const StateVec &psi, TpsLabel label) {
    Matrix2 m;
    for (int r = 0; r < 2; r++) {
        for (int s = 0; s < 2; s++) {
            m(r, s) = inner(basis_ket(label, r, s).ket(), psi.ket());
        }
    }
    return m;
}

SchmidtDecomposition schmidt(const StateVec &psi, TpsLabel label) {
    Svd2 svd = svd2(coefficient_matrix(psi, label));
    SchmidtDecomposition out{};
    out.label = label;
    out.coefficients = svd.values;
    for (size_t k = 0; k < 2; k++) {
        // psi_rs = sum_k s_k l_k[r] conj(r_k[s]), so the right factor is conj(r_k).
        Ket2 left = svd.left[k];
        Ket2 right = conj(svd.right[k]);
        for (size_t j = 0; j < 2; j++) {
            if (std::abs(left[j]) > kPhaseComponentFloor) {
                Complex phase = left[j] / std::abs(left[j]);
                left = left / phase;
                right = right * phase;
                break;
            }
        }
        out.left_basis[k] = left;
        out.right_basis[k] = right;
    }
    double second = out.coefficients[1];
    out.rank = second < kRankThreshold ? 1 : 2;
    out.near_degenerate = second >= kRankThreshold / 10 && second <= kRankThreshold * 10;
    return out;
}

TpsClassification classify_all(const StateVec &psi) {
    TpsClassification out;
    for (size_t k = 0; k < kAllLabels.size(); k++) {
        auto label = kAllLabels[k];
        auto decomposition = schmidt(psi, label);
        out.entries[k] = LabelClassification{
            label,
            decomposition.rank == 1 ? Separability::Product : Separability::Entangled,
            decomposition,
        };
    }
    return out;
}

double reduced_purity(const StateVec &psi, TpsLabel label, Side side) {
    Ket4 phi = perm_unitary(label).adjoint() * psi.ket();
    auto amp = [&](int r, int s) {
        return phi[2 * r + s];
    };
    Mat<2> rho;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                if (side == Side::Left) {
                    rho(i, j) += amp(i, k) * std::conj(amp(j, k));
                } else {
                    rho(i, j) += amp(k, i) * std::conj(amp(k, j));
                }
            }
        }
    }
    return (rho * rho).trace().real();
}

}  // namespace reltps
