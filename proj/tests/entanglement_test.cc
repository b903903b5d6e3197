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

#include <gtest/gtest.h>

#include "reltps/states.h"
#include "test_util.h"

using namespace reltps;
using reltps::testing::kInvSqrt2;

TEST(CoefficientMatrix, Singlet) {
    StateVec s = bell(BellKind::PsiMinus);
    Matrix2 m123 = coefficient_matrix(s, TpsLabel::L123);
    EXPECT_EQ(m123, (Matrix2{{0, kInvSqrt2, -kInvSqrt2, 0}}));
    Matrix2 m321 = coefficient_matrix(s, TpsLabel::L321);
    EXPECT_EQ(m321, (Matrix2{{0, 0, -kInvSqrt2, kInvSqrt2}}));
}

TEST(CoefficientMatrix, ZeroZeroHasSingleUnitEntry) {
    for (auto l : kAllLabels) {
        EXPECT_EQ(coefficient_matrix(StateVec::basis(0), l), (Matrix2{{1, 0, 0, 0}}));
    }
}

TEST(Schmidt, SingletExamples) {
    StateVec s = bell(BellKind::PsiMinus);
    auto a = schmidt(s, TpsLabel::L123);
    EXPECT_EQ(a.rank, 2);
    EXPECT_NEAR(a.coefficients[0], kInvSqrt2, 1e-15);
    EXPECT_NEAR(a.coefficients[1], kInvSqrt2, 1e-15);

    auto b = schmidt(s, TpsLabel::L321);
    EXPECT_EQ(b.rank, 1);
    EXPECT_NEAR(b.coefficients[0], 1, 1e-15);
    EXPECT_NEAR(b.coefficients[1], 0, 1e-15);
    EXPECT_LT(phase_distance(b.left_basis[0], Ket2::basis(1)), 1e-15);
    EXPECT_LT(phase_distance(b.right_basis[0], Ket2{{-kInvSqrt2, kInvSqrt2}}), 1e-15);
    // Left vector |1> is real positive, so the right one carries the sign.
    EXPECT_EQ(b.left_basis[0], Ket2::basis(1));
    EXPECT_LT(max_abs_diff(b.right_basis[0], Ket2{{-kInvSqrt2, kInvSqrt2}}), 1e-15);
}

TEST(ClassifyAll, SingletFrozenFromOracle) {
    auto c = classify_all(bell(BellKind::PsiMinus));
    const std::array<int, 6> ranks = {2, 1, 2, 1, 1, 1};  // kAllLabels order
    for (size_t k = 0; k < 6; k++) {
        const auto &e = c.entries[k];
        EXPECT_EQ(e.label, kAllLabels[k]);
        EXPECT_EQ(e.schmidt.rank, ranks[k]) << label_name(e.label);
        EXPECT_EQ(e.separability, ranks[k] == 2 ? Separability::Entangled : Separability::Product);
        double c0 = ranks[k] == 2 ? kInvSqrt2 : 1;
        double c1 = ranks[k] == 2 ? kInvSqrt2 : 0;
        EXPECT_NEAR(e.schmidt.coefficients[0], c0, 1e-10);
        EXPECT_NEAR(e.schmidt.coefficients[1], c1, 1e-10);
        EXPECT_FALSE(e.schmidt.near_degenerate);
    }
}

TEST(ClassifyAll, ZeroZeroProductEverywhere) {
    for (const auto &e : classify_all(StateVec::basis(0)).entries) {
        EXPECT_EQ(e.separability, Separability::Product);
    }
}

TEST(Schmidt, ReconstructionAndPhaseConvention) {
    Rng rng(20);
    for (int t = 0; t < 500; t++) {
        StateVec psi = random_state(rng);
        for (auto l : kAllLabels) {
            auto s = schmidt(psi, l);
            EXPECT_LT(phase_distance(s.reconstruct(), psi.ket()), 1e-10);
            EXPECT_LT(max_abs_diff(s.reconstruct(), psi.ket()), 1e-10);
            for (const auto &v : s.left_basis) {
                Complex first = std::abs(v[0]) > 1e-12 ? v[0] : v[1];
                EXPECT_NEAR(first.imag(), 0, 1e-15);
                EXPECT_GT(first.real(), 0);
            }
            EXPECT_EQ(s.rank, s.coefficients[1] < kRankThreshold ? 1 : 2);
        }
    }
}

TEST(Schmidt, NearDegenerateFlag) {
    Ket4 v = Ket4::basis(0) + Ket4::basis(3) * 5e-9;
    auto s = schmidt(StateVec::normalized(v), TpsLabel::L123);
    EXPECT_EQ(s.rank, 1);
    EXPECT_TRUE(s.near_degenerate);
    Ket4 w = Ket4::basis(0) + Ket4::basis(3) * 5e-8;
    auto s2 = schmidt(StateVec::normalized(w), TpsLabel::L123);
    EXPECT_EQ(s2.rank, 2);
    EXPECT_TRUE(s2.near_degenerate);
}

TEST(ReducedPurity, Examples) {
    StateVec s = bell(BellKind::PsiMinus);
    EXPECT_NEAR(reduced_purity(s, TpsLabel::L123, Side::Left), 0.5, 1e-15);
    EXPECT_NEAR(reduced_purity(s, TpsLabel::L321, Side::Left), 1, 1e-15);
}

TEST(ReducedPurity, OracleEquivalence) {
    const uint64_t seed = 21;
    Rng rng(seed);
    for (int t = 0; t < 1000; t++) {
        StateVec psi = random_state(rng);
        for (auto l : kAllLabels) {
            auto s = schmidt(psi, l);
            double want = std::pow(s.coefficients[0], 4) + std::pow(s.coefficients[1], 4);
            double left = reduced_purity(psi, l, Side::Left);
            double right = reduced_purity(psi, l, Side::Right);
            ASSERT_LT(std::abs(left - want), 1e-10) << "seed " << seed;
            ASSERT_LT(std::abs(left - right), 1e-12) << "seed " << seed;
            ASSERT_GE(left, 0.5 - 1e-12);
            ASSERT_LE(left, 1 + 1e-12);
        }
    }
}

TEST(Schmidt, InvariantUnderSameLabelLocalUnitaries) {
    Rng rng(22);
    for (int t = 0; t < 200; t++) {
        StateVec psi = random_state(rng);
        Op2 v = haar_su2(rng), w = haar_su2(rng);
        for (auto l : kAllLabels) {
            StateVec moved = StateVec::normalized(tensor_op(l, v, w) * psi.ket());
            auto a = schmidt(psi, l);
            auto b = schmidt(moved, l);
            EXPECT_NEAR(a.coefficients[0], b.coefficients[0], 1e-10);
            EXPECT_NEAR(a.coefficients[1], b.coefficients[1], 1e-10);
        }
    }
}

TEST(Schmidt, IffEigenvectorFamilies) {
    for (double theta : {0.1, 0.6, 1.0, 1.4}) {
        StateVec par(Ket4::basis(0) * std::cos(theta) + Ket4::basis(3) * std::sin(theta));
        StateVec perp(Ket4::basis(1) * std::cos(theta) + Ket4::basis(2) * std::sin(theta));
        for (const auto &f : {par, perp}) {
            EXPECT_EQ(schmidt(f, TpsLabel::L321).rank, 1);
            EXPECT_EQ(schmidt(f, TpsLabel::L123).rank, 2);
        }
    }
}
