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

#include "reltps/linalg.h"

#include <sstream>
#include <stdexcept>

namespace reltps {

namespace pauli {

Op2 x() {
    Op2 m;
    m(0, 1) = 1;
    m(1, 0) = 1;
    return m;
}

Op2 y() {
    Op2 m;
    m(0, 1) = Complex{0, -1};
    m(1, 0) = Complex{0, 1};
    return m;
}

Op2 z() {
    return Op2::diagonal({1, -1});
}

Op2 projector(int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
    return bit == 0 ? Op2::diagonal({1, 0}) : Op2::diagonal({0, 1});
}

}  // namespace pauli

Op4 kron(const Op2 &a, const Op2 &b) {
    Op4 out;
    for (size_t r = 0; r < 2; r++) {
        for (size_t s = 0; s < 2; s++) {
            for (size_t u = 0; u < 2; u++) {
                for (size_t v = 0; v < 2; v++) {
                    out(2 * r + s, 2 * u + v) = a(r, u) * b(s, v);
                }
            }
        }
    }
    return out;
}

Ket4 kron(const Ket2 &a, const Ket2 &b) {
    Ket4 out;
    for (size_t r = 0; r < 2; r++) {
        for (size_t s = 0; s < 2; s++) {
            out[2 * r + s] = a[r] * b[s];
        }
    }
    return out;
}

Complex det(const Mat<2> &m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

StateVec::StateVec(const Ket4 &amplitudes) : amplitudes_(amplitudes) {
    double n = norm(amplitudes);
    if (!(std::abs(n - 1.0) <= kTolerance)) {
        std::stringstream ss;
        ss << "state is not normalized (norm = " << n << ")";
        throw std::invalid_argument(ss.str());
    }
}

StateVec StateVec::normalized(const Ket4 &amplitudes) {
    double n = norm(amplitudes);
    if (!std::isfinite(n)) {
        throw std::invalid_argument("state has non-finite amplitudes");
    }
    if (n == 0) {
        throw std::invalid_argument("state vector is zero");
    }
    return StateVec(amplitudes / n);
}

Matrix2 Svd2::reconstruct() const {
    Matrix2 out;
    for (size_t k = 0; k < 2; k++) {
        out = out + Matrix2::outer(left[k], right[k]) * values[k];
    }
    return out;
}

namespace {

Ket2 orthogonal_complement(const Ket2 &u) {
    Ket2 c;
    c[0] = -std::conj(u[1]);
    c[1] = std::conj(u[0]);
    return c;
}

/// Unit eigenvector of the hermitian matrix [[p, q], [conj(q), r]] for its
/// larger eigenvalue. Picks whichever of the two row-derived candidates avoids
/// cancellation.
Ket2 top_eigenvector(double p, Complex q, double r) {
    double d = (p - r) / 2;
    double h = std::hypot(d, std::abs(q));
    Ket2 v;
    if (h == 0) {
        v[0] = 1;
        return v;
    }
    if (d >= 0) {
        v[0] = d + h;
        v[1] = std::conj(q);
    } else {
        v[0] = q;
        v[1] = h - d;
    }
    return v / norm(v);
}

}  // namespace

Svd2 svd2(const Matrix2 &m) {
    Svd2 out;
    double scale = 0;
    for (const auto &x : m.a) {
        scale = std::max(scale, std::abs(x));
    }
    if (scale == 0) {
        out.values = {0, 0};
        out.left = {Ket2::basis(0), Ket2::basis(1)};
        out.right = {Ket2::basis(0), Ket2::basis(1)};
        return out;
    }
    // Scaling keeps M^dag M away from overflow/underflow.
    Matrix2 a = m * (1.0 / scale);
    Matrix2 gram = a.adjoint() * a;
    Ket2 r0 = top_eigenvector(gram(0, 0).real(), gram(0, 1), gram(1, 1).real());
    Ket2 r1 = orthogonal_complement(r0);

    Ket2 image0 = a * r0;
    double s0 = norm(image0);
    Ket2 l0 = image0 / s0;

    // a r1 is orthogonal to l0; its component along the complement fixes both
    // the small singular value and the phase of l1 without dividing by it.
    Ket2 c = orthogonal_complement(l0);
    Complex w = inner(c, a * r1);
    double s1 = std::abs(w);
    Ket2 l1 = s1 > 0 ? c * (w / s1) : c;

    out.values = {s0 * scale, s1 * scale};
    out.left = {l0, l1};
    out.right = {r0, r1};
    return out;
}

namespace {

template <size_t N>
std::string str_mat(const Mat<N> &m) {
    std::stringstream ss;
    for (size_t r = 0; r < N; r++) {
        ss << (r == 0 ? "[" : " ");
        for (size_t c = 0; c < N; c++) {
            if (c) {
                ss << ", ";
            }
            ss << m(r, c);
        }
        ss << (r + 1 == N ? "]" : "\n");
    }
    return ss.str();
}

}  // namespace

std::string str(const Op2 &m) {
    return str_mat(m);
}

std::string str(const Op4 &m) {
    return str_mat(m);
}

std::string str(const Ket4 &v) {
    std::stringstream ss;
    ss << "(";
    for (size_t k = 0; k < 4; k++) {
        if (k) {
            ss << ", ";
        }
        ss << v[k];
    }
    ss << ")";
    return ss.str();
}

}  // namespace reltps
