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

#include "reltps/states.h"

#include <gtest/gtest.h>

#include <numbers>

#include "reltps/tps.h"
#include "reltps/verify.h"
#include "test_util.h"

using namespace reltps;
using reltps::testing::kInvSqrt2;
using reltps::testing::random_op2;

TEST(Bell, Amplitudes) {
    EXPECT_EQ(bell(BellKind::PsiMinus).ket(), (Ket4{{0, kInvSqrt2, -kInvSqrt2, 0}}));
    EXPECT_EQ(bell(BellKind::PhiPlus).ket(), (Ket4{{kInvSqrt2, 0, 0, kInvSqrt2}}));
    for (auto kind : {BellKind::PsiMinus, BellKind::PsiPlus, BellKind::PhiMinus, BellKind::PhiPlus}) {
        EXPECT_NEAR(norm(bell(kind).ket()), 1, 1e-15);
    }
}

TEST(ColorKet, ReferenceBasis) {
    EXPECT_EQ(color_ket(ColorChannel::C).ket(), Ket4::basis(0));
    EXPECT_EQ(color_ket(ColorChannel::G).ket(), Ket4::basis(3));
    EXPECT_EQ(inner(color_ket(ColorChannel::M).ket(), color_ket(ColorChannel::Y).ket()), Complex{0});
    EXPECT_EQ(color_letter(ColorChannel::Y), 'Y');
}

TEST(Su2, ClosedForm) {
    EXPECT_LT(max_abs_diff(su2({{0, 0, 1}, 0}), Op2::identity()), 1e-15);
    Op2 half_turn = su2({{0, 0, 1}, std::numbers::pi});
    EXPECT_LT(max_abs_diff(half_turn, pauli::z() * Complex{0, -1}), 1e-15);
    Op2 v = su2({{0.6, 0, 0.8}, 1.234});
    EXPECT_LT(std::abs(det(v) - Complex{1}), 1e-12);
    EXPECT_TRUE(is_unitary(v, 1e-12));
}

TEST(Su2, RejectsNonUnitAxis) {
    EXPECT_THROW(su2({{1, 1, 0}, 0.5}), std::invalid_argument);
    EXPECT_THROW(su2({{0, 0, 0}, 0.5}), std::invalid_argument);
}

TEST(HaarSu2, DeterministicForSeed) {
    Rng a(42), b(42);
    EXPECT_EQ(haar_su2(a), haar_su2(b));
}

TEST(HaarSu2, UnitaryWithUnitDeterminant) {
    Rng rng(9);
    for (int t = 0; t < 1000; t++) {
        Op2 v = haar_su2(rng);
        EXPECT_TRUE(is_unitary(v, 1e-12));
        EXPECT_LT(std::abs(det(v) - Complex{1}), 1e-12);
    }
}

TEST(HaarSu2, MeanAbsHalfTrace) {
    // Oracle: 10^6 Ginibre-QR samples give 0.42487; closed form 4/(3 pi).
    const uint64_t seed = 2026;
    Rng rng(seed);
    double sum = 0;
    const int n = 1000;
    for (int t = 0; t < n; t++) {
        sum += std::abs(haar_su2(rng).trace()) / 2;
    }
    double mean = sum / n;
    EXPECT_NEAR(mean, 4 / (3 * std::numbers::pi), 0.02) << "seed " << seed;
}

TEST(LocalChange, IdentityLeavesOperatorUnchanged) {
    Rng rng(10);
    Op4 m = kron(random_op2(rng), random_op2(rng));
    EXPECT_EQ(local_change(Op2::identity(), Op2::identity(), m), m);
}

TEST(LocalChange, RejectsNonUnitary) {
    EXPECT_THROW(local_change(pauli::projector(0), Op2::identity(), Op4::identity()), std::invalid_argument);
    EXPECT_THROW(local_change(Op2::identity(), Op2::identity() * 2.0, Ket4::basis(0)), std::invalid_argument);
}

TEST(LocalChange, RotatedProductProjector) {
    Rng rng(11);
    for (int t = 0; t < 100; t++) {
        Op2 v = haar_su2(rng), w = haar_su2(rng);
        Ket4 k = kron(v * Ket2::basis(0), w * Ket2::basis(0));
        Op4 p00 = kron(pauli::projector(0), pauli::projector(0));
        EXPECT_LT(max_abs_diff(local_change(v, w, p00), Op4::outer(k, k)), 1e-12);
    }
}

TEST(LocalChange, RotatedIffProjectorStaysProjector) {
    Rng rng(12);
    for (int t = 0; t < 100; t++) {
        Op2 v = haar_su2(rng);
        Op4 p = local_change(v, v, subsystem_projector(TpsLabel::L321, Side::Left, 0).projector);
        EXPECT_TRUE(is_projector(p, 1e-12));
        EXPECT_NEAR(p.trace().real(), 2, 1e-12);
        for (auto side : {Side::Left, Side::Right}) {
            for (int a = 0; a < 2; a++) {
                Op4 q = local_change(v, v, subsystem_projector(TpsLabel::L321, side, a).projector);
                EXPECT_LT(commutator_defect(p, q), 1e-12);
            }
        }
    }
}

TEST(LocalChange, StarHomomorphism) {
    Rng rng(13);
    for (int t = 0; t < 50; t++) {
        Op2 v = haar_su2(rng), w = haar_su2(rng);
        for (auto l : kAllLabels) {
            Op4 x = tensor_op(l, random_op2(rng), random_op2(rng));
            Op4 y = tensor_op(l, random_op2(rng), random_op2(rng));
            EXPECT_LT(max_abs_diff(local_change(v, w, x * y), local_change(v, w, x) * local_change(v, w, y)), 1e-12);
            EXPECT_LT(max_abs_diff(local_change(v, w, x.adjoint()), local_change(v, w, x).adjoint()), 1e-12);
        }
    }
}

TEST(LocalChange, MapsKroneckerProductsLocally) {
    Rng rng(14);
    for (int t = 0; t < 50; t++) {
        Op2 v = haar_su2(rng), w = haar_su2(rng), a = random_op2(rng), b = random_op2(rng);
        EXPECT_LT(max_abs_diff(local_change(v, w, kron(a, b)), kron(v * a * v.adjoint(), w * b * w.adjoint())),
                  1e-12);
        // Same-label rotation acts locally on every product.
        for (auto l : kAllLabels) {
            Op4 u = tensor_op(l, v, w);
            EXPECT_LT(max_abs_diff(u * tensor_op(l, a, b) * u.adjoint(),
                                   tensor_op(l, v * a * v.adjoint(), w * b * w.adjoint())),
                      1e-12);
        }
    }
}

TEST(LocalChange, NotLocalForOtherLabelsInGeneral) {
    // (V (x) V) conjugation does not preserve the 321 factorization of sigma_3 (x)_321 I.
    Op2 v = su2({{1, 0, 0}, 0.7});
    Op2 z = pauli::z();
    Op4 lhs = local_change(v, v, tensor_op(TpsLabel::L321, z, Op2::identity()));
    Op4 rhs = tensor_op(TpsLabel::L321, v * z * v.adjoint(), Op2::identity());
    EXPECT_GT(max_abs_diff(lhs, rhs), 0.1);
}

TEST(Invariance, SingletUnderVV) {
    Rng rng(15);
    Ket4 s = bell(BellKind::PsiMinus).ket();
    EXPECT_LT(max_invariance_distance(s, 1000, rng), 1e-10);
    Ket4 phased = s * std::polar(1.0, 1.1);
    EXPECT_LT(max_invariance_distance(phased, 100, rng), 1e-10);
}

TEST(Invariance, OtherBellStatesMove) {
    const uint64_t seed = 16;
    Rng rng(seed);
    for (auto kind : {BellKind::PsiPlus, BellKind::PhiPlus, BellKind::PhiMinus}) {
        EXPECT_GT(max_invariance_distance(bell(kind).ket(), 50, rng), 0.1) << "seed " << seed;
    }
}

TEST(Invariance, PhiPlusFixedRotations) {
    Ket4 phi = bell(BellKind::PhiPlus).ket();
    Op2 v2 = su2({{0, 1, 0}, std::numbers::pi / 2});
    Op2 v3 = su2({{0, 0, 1}, std::numbers::pi / 2});
    // Real rotations fix Phi_+; the sigma_3 rotation maps it to Phi_- up to phase.
    EXPECT_LT(phase_distance(kron(v2, v2) * phi, phi), 1e-12);
    EXPECT_NEAR(phase_distance(kron(v3, v3) * phi, phi), std::sqrt(2.0), 1e-12);
}

TEST(BuiltinState, Names) {
    EXPECT_EQ(builtin_state("singlet"), bell(BellKind::PsiMinus));
    EXPECT_EQ(builtin_state("psi-"), bell(BellKind::PsiMinus));
    EXPECT_EQ(builtin_state("phi+"), bell(BellKind::PhiPlus));
    EXPECT_EQ(builtin_state("g"), color_ket(ColorChannel::G));
    EXPECT_EQ(builtin_state("uniform")->ket(), (Ket4{{0.5, 0.5, 0.5, 0.5}}));
    EXPECT_FALSE(builtin_state("nope"));
}

TEST(RandomState, NormalizedAndDeterministic) {
    Rng a(17), b(17);
    StateVec s = random_state(a);
    EXPECT_NEAR(norm(s.ket()), 1, 1e-15);
    EXPECT_EQ(s, random_state(b));
}
