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

#ifndef RELTPS_TPS_H
#define RELTPS_TPS_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "reltps/linalg.h"

namespace reltps {

/// One of the six tensor product structures on C^4, named by the permutation
/// (a, b, c) of (1, 2, 3) such that U_abc maps |1>,|2>,|3> to |a>,|b>,|c>.
///
/// Swapping rows or columns of the projector table only flips a local bit, so
/// those wirings are not separate labels here.
enum class TpsLabel : uint8_t {
    L123,
    L132,
    L213,
    L231,
    L312,
    L321,
};

inline constexpr std::array<TpsLabel, 6> kAllLabels = {
    TpsLabel::L123, TpsLabel::L132, TpsLabel::L213, TpsLabel::L231, TpsLabel::L312, TpsLabel::L321,
};

/// "123", "321", ...
std::string_view label_name(TpsLabel label);
/// The triple (a, b, c).
std::array<int, 3> label_digits(TpsLabel label);
/// Parses a three-digit label; std::nullopt for anything else.
std::optional<TpsLabel> parse_label(std::string_view text);

/// Left is the first factor of the product, Right the second.
enum class Side : uint8_t { Left, Right };

std::string_view side_name(Side side);

/// A yes/no question about the two bits together with its projector.
struct Proposition {
    std::string text;
    Op4 projector;
};

/// The six question texts, keyed to the reference (123) wiring.
namespace proposition_text {
inline constexpr std::string_view kAlice0 = "0 of Alice";
inline constexpr std::string_view kAlice1 = "1 of Alice";
inline constexpr std::string_view kBob0 = "0 of Bob";
inline constexpr std::string_view kBob1 = "1 of Bob";
inline constexpr std::string_view kIff = "Alice IFF Bob";
inline constexpr std::string_view kXor = "Alice XOR Bob";
}  // namespace proposition_text

/// Hard-coded permutation matrix for the label.
Op4 perm_unitary(TpsLabel label);

/// The same matrix rebuilt from the permutation (0,1,2,3) -> (0,a,b,c):
/// entry (k, l) is 1 iff the permutation sends l to k. Exists so the two
/// constructions can be compared.
Op4 perm_unitary_from_definition(TpsLabel label);

/// A (x)_label B = U (A (x) B) U^dag.
Op4 tensor_op(TpsLabel label, const Op2 &a, const Op2 &b);

/// |x> (x)_label |y> = U (|x> (x) |y>).
Ket4 tensor_ket(TpsLabel label, const Ket2 &x, const Ket2 &y);

/// |rs_label> = U |2r+s>.
StateVec basis_ket(TpsLabel label, int r, int s);

/// P_alpha (x)_label I (Left) or I (x)_label P_alpha (Right), built as the sum
/// of |rs_label><rs_label| over the other bit.
Proposition subsystem_projector(TpsLabel label, Side side, int alpha);

/// Reference-basis indices {k1 < k2} spanned by the subsystem projector.
std::array<int, 2> projector_support(TpsLabel label, Side side, int alpha);

/// Names the question whose projector is diagonal on the given pair of
/// reference indices. Throws std::invalid_argument for a pair that does not
/// contain exactly two distinct indices in 0..3.
std::string_view proposition_for_support(std::array<int, 2> support);

/// The label with perm_unitary(result) = perm_unitary(outer) * perm_unitary(inner).
TpsLabel compose(TpsLabel outer, TpsLabel inner);

TpsLabel inverse(TpsLabel label);

/// min over all labels L of ||(A (x)_left B)(C (x)_right D) - (AC) (x)_L (BD)||,
/// using the max-entry norm. Zero when left == right.
double mixed_product_defect(
    TpsLabel left, TpsLabel right, const Op2 &a, const Op2 &b, const Op2 &c, const Op2 &d);

}  // namespace reltps

#endif
