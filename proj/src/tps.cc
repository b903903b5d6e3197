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

#include "reltps/tps.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace reltps {

namespace {

size_t index_of(TpsLabel label) {
    return static_cast<size_t>(label);
}

constexpr std::array<std::string_view, 6> kNames = {"123", "132", "213", "231", "312", "321"};

// Matrix elements <k|U_abc|l>, one row of four per k.
constexpr std::array<std::array<int, 16>, 6> kPermutationMatrices = {{
    // 123
    {1, 0, 0, 0,  //
     0, 1, 0, 0,  //
     0, 0, 1, 0,  //
     0, 0, 0, 1},
    // 132
    {1, 0, 0, 0,  //
     0, 1, 0, 0,  //
     0, 0, 0, 1,  //
     0, 0, 1, 0},
    // 213
    {1, 0, 0, 0,  //
     0, 0, 1, 0,  //
     0, 1, 0, 0,  //
     0, 0, 0, 1},
    // 231
    {1, 0, 0, 0,  //
     0, 0, 0, 1,  //
     0, 1, 0, 0,  //
     0, 0, 1, 0},
    // 312
    {1, 0, 0, 0,  //
     0, 0, 1, 0,  //
     0, 0, 0, 1,  //
     0, 1, 0, 0},
    // 321
    {1, 0, 0, 0,  //
     0, 0, 0, 1,  //
     0, 0, 1, 0,  //
     0, 1, 0, 0},
}};

void check_bit(int bit, const char *name) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument(std::string(name) + " must be 0 or 1");
    }
}

}  // namespace

std::string_view label_name(TpsLabel label) {
    return kNames[index_of(label)];
}

std::array<int, 3> label_digits(TpsLabel label) {
    auto name = label_name(label);
    return {name[0] - '0', name[1] - '0', name[2] - '0'};
}

std::optional<TpsLabel> parse_label(std::string_view text) {
    for (auto label : kAllLabels) {
        if (label_name(label) == text) {
            return label;
        }
    }
    return std::nullopt;
}

std::string_view side_name(Side side) {
    return side == Side::Left ? "left" : "right";
}

Op4 perm_unitary(TpsLabel label) {
    const auto &entries = kPermutationMatrices[index_of(label)];
    Op4 u;
    for (size_t k = 0; k < 16; k++) {
        u.a[k] = entries[k];
    }
    return u;
}

Op4 perm_unitary_from_definition(TpsLabel label) {
    auto d = label_digits(label);
    std::array<int, 4> image = {0, d[0], d[1], d[2]};
    Op4 u;
    for (size_t l = 0; l < 4; l++) {
        u(image[l], l) = 1;
    }
    return u;
}

Op4 tensor_op(TpsLabel label, const Op2 &a, const Op2 &b) {
    Op4 u = perm_unitary(label);
    return u * kron(a, b) * u.adjoint();
}

Ket4 tensor_ket(TpsLabel label, const Ket2 &x, const Ket2 &y) {
    return perm_unitary(label) * kron(x, y);
}

StateVec basis_ket(TpsLabel label, int r, int s) {
    check_bit(r, "r");
    check_bit(s, "s");
    return StateVec(perm_unitary(label) * Ket4::basis(2 * r + s));
}

std::array<int, 2> projector_support(TpsLabel label, Side side, int alpha) {
    check_bit(alpha, "alpha");
    auto d = label_digits(label);
    std::array<int, 4> image = {0, d[0], d[1], d[2]};
    std::array<int, 2> support{};
    for (int other = 0; other < 2; other++) {
        int r = side == Side::Left ? alpha : other;
        int s = side == Side::Left ? other : alpha;
        support[other] = image[2 * r + s];
    }
    std::sort(support.begin(), support.end());
    return support;
}

std::string_view proposition_for_support(std::array<int, 2> support) {
    std::sort(support.begin(), support.end());
    if (support[0] < 0 || support[1] > 3 || support[0] == support[1]) {
        throw std::invalid_argument("support must be two distinct indices in 0..3");
    }
    // Index k = 2r + s with r Alice's bit and s Bob's bit in the 123 wiring.
    using namespace proposition_text;
    if (support == std::array<int, 2>{0, 1}) return kAlice0;
    if (support == std::array<int, 2>{2, 3}) return kAlice1;
    if (support == std::array<int, 2>{0, 2}) return kBob0;
    if (support == std::array<int, 2>{1, 3}) return kBob1;
    if (support == std::array<int, 2>{0, 3}) return kIff;
    return kXor;
}

Proposition subsystem_projector(TpsLabel label, Side side, int alpha) {
    check_bit(alpha, "alpha");
    Op4 p;
    for (int other = 0; other < 2; other++) {
        int r = side == Side::Left ? alpha : other;
        int s = side == Side::Left ? other : alpha;
        Ket4 ket = basis_ket(label, r, s).ket();
        p = p + Op4::outer(ket, ket);
    }
    return Proposition{std::string(proposition_for_support(projector_support(label, side, alpha))), p};
}

TpsLabel compose(TpsLabel outer, TpsLabel inner) {
    Op4 product = perm_unitary(outer) * perm_unitary(inner);
    for (auto label : kAllLabels) {
        if (perm_unitary(label) == product) {
            return label;
        }
    }
    throw std::logic_error("permutation unitaries are not closed under composition");
}

TpsLabel inverse(TpsLabel label) {
    for (auto candidate : kAllLabels) {
        if (compose(label, candidate) == TpsLabel::L123) {
            return candidate;
        }
    }
    throw std::logic_error("permutation unitary without inverse");
}

double mixed_product_defect(
    TpsLabel left, TpsLabel right, const Op2 &a, const Op2 &b, const Op2 &c, const Op2 &d) {
    Op4 lhs = tensor_op(left, a, b) * tensor_op(right, c, d);
    Op2 ac = a * c;
    Op2 bd = b * d;
    double best = std::numeric_limits<double>::infinity();
    for (auto label : kAllLabels) {
        best = std::min(best, max_abs_diff(lhs, tensor_op(label, ac, bd)));
    }
    return best;
}

}  // namespace reltps
