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

#include <stdexcept>

namespace reltps {

char color_letter(ColorChannel c) {
    return "CMYG"[static_cast<size_t>(c)];
}

StateVec color_ket(ColorChannel c) {
    return StateVec::basis(static_cast<size_t>(c));
}

StateVec bell(BellKind kind) {
    const double h = 1 / std::sqrt(2.0);
    Ket4 v;
    switch (kind) {
        case BellKind::PsiMinus:
            v[1] = h;
            v[2] = -h;
            break;
        case BellKind::PsiPlus:
            v[1] = h;
            v[2] = h;
            break;
        case BellKind::PhiMinus:
            v[0] = h;
            v[3] = -h;
            break;
        case BellKind::PhiPlus:
            v[0] = h;
            v[3] = h;
            break;
    }
    return StateVec(v);
}

StateVec uniform_state() {
    Ket4 v;
    for (auto &x : v.v) {
        x = 0.5;
    }
    return StateVec(v);
}

Op2 su2(const Su2Params &p) {
    const auto &n = p.axis;
    double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (!(std::abs(len - 1) <= kTolerance)) {
        throw std::invalid_argument("su2 axis must be a unit vector");
    }
    double c = std::cos(p.angle / 2);
    double s = std::sin(p.angle / 2);
    const Complex i{0, 1};
    Op2 out = Op2::identity() * c;
    out = out - (pauli::x() * n[0] + pauli::y() * n[1] + pauli::z() * n[2]) * (i * s);
    return out;
}

Op2 haar_su2(Rng &rng) {
    std::normal_distribution<double> normal;
    std::array<double, 4> q;
    double len = 0;
    do {
        for (auto &x : q) {
            x = normal(rng);
        }
        len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    } while (len < 1e-12);
    for (auto &x : q) {
        x /= len;
    }
    Op2 out;
    out(0, 0) = Complex{q[0], -q[1]};
    out(0, 1) = Complex{-q[2], -q[3]};
    out(1, 0) = Complex{q[2], -q[3]};
    out(1, 1) = Complex{q[0], q[1]};
    return out;
}

StateVec random_state(Rng &rng) {
    std::normal_distribution<double> normal;
    Ket4 v;
    do {
        for (auto &x : v.v) {
            double re = normal(rng);
            double im = normal(rng);
            x = Complex{re, im};
        }
    } while (norm(v) < 1e-12);
    return StateVec::normalized(v);
}

namespace {

void require_unitary(const Op2 &v, const Op2 &w) {
    if (!is_unitary(v) || !is_unitary(w)) {
        throw std::invalid_argument("local_change requires unitary V and W");
    }
}

}  // namespace

Op4 local_change(const Op2 &v, const Op2 &w, const Op4 &m) {
    require_unitary(v, w);
    Op4 u = kron(v, w);
    return u * m * u.adjoint();
}

Ket4 local_change(const Op2 &v, const Op2 &w, const Ket4 &psi) {
    require_unitary(v, w);
    return kron(v, w) * psi;
}

std::optional<StateVec> builtin_state(std::string_view name) {
    if (name == "singlet" || name == "psi-") return bell(BellKind::PsiMinus);
    if (name == "psi+") return bell(BellKind::PsiPlus);
    if (name == "phi+") return bell(BellKind::PhiPlus);
    if (name == "phi-") return bell(BellKind::PhiMinus);
    if (name == "c") return color_ket(ColorChannel::C);
    if (name == "m") return color_ket(ColorChannel::M);
    if (name == "y") return color_ket(ColorChannel::Y);
    if (name == "g") return color_ket(ColorChannel::G);
    if (name == "uniform") return uniform_state();
    return std::nullopt;
}

}  // namespace reltps
