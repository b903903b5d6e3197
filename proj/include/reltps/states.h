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

#ifndef RELTPS_STATES_H
#define RELTPS_STATES_H

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "reltps/linalg.h"

namespace reltps {

/// Seedable generator used for every stochastic routine in the library.
using Rng = std::mt19937_64;

/// The four decay channels. The enumerator value is the reference index.
enum class ColorChannel : uint8_t { C = 0, M = 1, Y = 2, G = 3 };

inline constexpr std::array<ColorChannel, 4> kAllColors = {
    ColorChannel::C, ColorChannel::M, ColorChannel::Y, ColorChannel::G};

char color_letter(ColorChannel c);
StateVec color_ket(ColorChannel c);

enum class BellKind : uint8_t { PsiMinus, PsiPlus, PhiMinus, PhiPlus };

/// (|01> +- |10>)/sqrt2 or (|00> +- |11>)/sqrt2 in the reference basis.
StateVec bell(BellKind kind);

/// Equal superposition of all four channels.
StateVec uniform_state();

/// Rotation exp(-i angle/2 axis.sigma).
struct Su2Params {
    std::array<double, 3> axis;
    double angle;
};

/// Throws std::invalid_argument if the axis is not unit length within kTolerance.
Op2 su2(const Su2Params &p);

/// Haar-random SU(2) element: four standard normals normalized to a unit
/// quaternion (a, b, c, d) -> [[a - ib, -c - id], [c - id, a + ib]].
Op2 haar_su2(Rng &rng);

/// (V (x) W) M (V (x) W)^dag.
///
/// The local basis change is always V (x)_123 W whatever product M was built
/// with: applied to |rs_abc><rs_abc| it gives the projector onto the rotated
/// ket (V (x) W)|rs_abc>. Throws std::invalid_argument unless V and W are
/// unitary within kTolerance.
Op4 local_change(const Op2 &v, const Op2 &w, const Op4 &m);

/// (V (x) W)|psi>, with the same unitarity check.
Ket4 local_change(const Op2 &v, const Op2 &w, const Ket4 &psi);

/// Haar-random pure state: eight standard normals as four complex amplitudes,
/// normalized.
StateVec random_state(Rng &rng);

/// Named states accepted by the command line: singlet, psi+, phi+, phi-,
/// c, m, y, g, uniform.
std::optional<StateVec> builtin_state(std::string_view name);

}  // namespace reltps

#endif
