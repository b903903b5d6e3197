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

#ifndef RELTPS_LINALG_H
#define RELTPS_LINALG_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

namespace reltps {

using Complex = std::complex<double>;

/// Default absolute tolerance on matrix/vector entries.
inline constexpr double kTolerance = 1e-10;

/// Column vector of fixed dimension.
template <size_t N>
struct Vec {
    std::array<Complex, N> v{};

    static Vec basis(size_t k) {
        Vec out;
        out.v[k] = 1;
        return out;
    }

    Complex &operator[](size_t k) {
        return v[k];
    }
    const Complex &operator[](size_t k) const {
        return v[k];
    }

    Vec operator+(const Vec &other) const {
        Vec out;
        for (size_t k = 0; k < N; k++) {
            out.v[k] = v[k] + other.v[k];
        }
        return out;
    }
    Vec operator-(const Vec &other) const {
        Vec out;
        for (size_t k = 0; k < N; k++) {
            out.v[k] = v[k] - other.v[k];
        }
        return out;
    }
    Vec operator*(Complex scale) const {
        Vec out;
        for (size_t k = 0; k < N; k++) {
            out.v[k] = v[k] * scale;
        }
        return out;
    }
    Vec operator/(Complex scale) const {
        return *this * (Complex{1} / scale);
    }
    bool operator==(const Vec &other) const = default;
};

/// Square matrix of fixed dimension, row-major.
template <size_t N>
struct Mat {
    std::array<Complex, N * N> a{};

    static Mat identity() {
        Mat out;
        for (size_t k = 0; k < N; k++) {
            out(k, k) = 1;
        }
        return out;
    }

    static Mat diagonal(const std::array<Complex, N> &d) {
        Mat out;
        for (size_t k = 0; k < N; k++) {
            out(k, k) = d[k];
        }
        return out;
    }

    /// |ket><bra|
    static Mat outer(const Vec<N> &ket, const Vec<N> &bra) {
        Mat out;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                out(r, c) = ket[r] * std::conj(bra[c]);
            }
        }
        return out;
    }

    Complex &operator()(size_t r, size_t c) {
        return a[r * N + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return a[r * N + c];
    }

    Mat operator+(const Mat &other) const {
        Mat out;
        for (size_t k = 0; k < N * N; k++) {
            out.a[k] = a[k] + other.a[k];
        }
        return out;
    }
    Mat operator-(const Mat &other) const {
        Mat out;
        for (size_t k = 0; k < N * N; k++) {
            out.a[k] = a[k] - other.a[k];
        }
        return out;
    }
    Mat operator*(Complex scale) const {
        Mat out;
        for (size_t k = 0; k < N * N; k++) {
            out.a[k] = a[k] * scale;
        }
        return out;
    }
    Mat operator*(const Mat &other) const {
        Mat out;
        for (size_t r = 0; r < N; r++) {
            for (size_t k = 0; k < N; k++) {
                Complex x = (*this)(r, k);
                if (x == Complex{}) {
                    continue;
                }
                for (size_t c = 0; c < N; c++) {
                    out(r, c) += x * other(k, c);
                }
            }
        }
        return out;
    }
    Vec<N> operator*(const Vec<N> &ket) const {
        Vec<N> out;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                out[r] += (*this)(r, c) * ket[c];
            }
        }
        return out;
    }
    bool operator==(const Mat &other) const = default;

    Mat adjoint() const {
        Mat out;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    Complex trace() const {
        Complex t{};
        for (size_t k = 0; k < N; k++) {
            t += (*this)(k, k);
        }
        return t;
    }
};

using Op2 = Mat<2>;
using Op4 = Mat<4>;
using Ket2 = Vec<2>;
using Ket4 = Vec<4>;

/// A 2x2 matrix that is not necessarily an operator (e.g. amplitudes psi_rs).
using Matrix2 = Mat<2>;

namespace pauli {
Op2 x();
Op2 y();
Op2 z();
/// Projector onto |bit>.
Op2 projector(int bit);
}  // namespace pauli

Op4 kron(const Op2 &a, const Op2 &b);
Ket4 kron(const Ket2 &a, const Ket2 &b);

template <size_t N>
Complex inner(const Vec<N> &bra, const Vec<N> &ket) {
    Complex t{};
    for (size_t k = 0; k < N; k++) {
        t += std::conj(bra[k]) * ket[k];
    }
    return t;
}

template <size_t N>
double norm(const Vec<N> &ket) {
    double t = 0;
    for (const auto &x : ket.v) {
        t += std::norm(x);
    }
    return std::sqrt(t);
}

template <size_t N>
double max_abs_diff(const Vec<N> &a, const Vec<N> &b) {
    double m = 0;
    for (size_t k = 0; k < N; k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

template <size_t N>
double max_abs_diff(const Mat<N> &a, const Mat<N> &b) {
    double m = 0;
    for (size_t k = 0; k < N * N; k++) {
        m = std::max(m, std::abs(a.a[k] - b.a[k]));
    }
    return m;
}

template <size_t N>
double frobenius_norm(const Mat<N> &m) {
    double t = 0;
    for (const auto &x : m.a) {
        t += std::norm(x);
    }
    return std::sqrt(t);
}

template <size_t N>
bool is_finite(const Mat<N> &m) {
    for (const auto &x : m.a) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            return false;
        }
    }
    return true;
}

template <size_t N>
bool approx_equal(const Mat<N> &a, const Mat<N> &b, double tol = kTolerance) {
    return max_abs_diff(a, b) <= tol;
}

template <size_t N>
bool approx_equal(const Vec<N> &a, const Vec<N> &b, double tol = kTolerance) {
    return max_abs_diff(a, b) <= tol;
}

template <size_t N>
bool is_unitary(const Mat<N> &m, double tol = kTolerance) {
    return max_abs_diff(m.adjoint() * m, Mat<N>::identity()) <= tol;
}

template <size_t N>
bool is_hermitian(const Mat<N> &m, double tol = kTolerance) {
    return max_abs_diff(m.adjoint(), m) <= tol;
}

template <size_t N>
bool is_projector(const Mat<N> &m, double tol = kTolerance) {
    return is_hermitian(m, tol) && max_abs_diff(m * m, m) <= tol;
}

/// Commutator norm ||AB - BA|| in the max-entry sense.
template <size_t N>
double commutator_defect(const Mat<N> &a, const Mat<N> &b) {
    return max_abs_diff(a * b, b * a);
}

/// Determinant of a 2x2 matrix.
Complex det(const Mat<2> &m);

/// Distance between two states that ignores global phase. For unit vectors it
/// equals sqrt(2 - 2 |<a|b>|), evaluated as ||a - e^{i theta} b|| with theta
/// aligning the phases so that nearly equal states do not lose half their
/// digits to the square root.
template <size_t N>
double phase_distance(const Vec<N> &a, const Vec<N> &b) {
    Complex overlap = inner(b, a);
    double mag = std::abs(overlap);
    Complex phase = mag > 0 ? overlap / mag : Complex{1};
    return norm(a - b * phase);
}

/// Normalized 4-amplitude state in the reference (color) basis.
class StateVec {
   public:
    /// Throws std::invalid_argument unless |amplitudes| = 1 within kTolerance.
    explicit StateVec(const Ket4 &amplitudes);

    /// Rescales to unit norm. Throws std::invalid_argument on a zero or
    /// non-finite vector.
    static StateVec normalized(const Ket4 &amplitudes);

    static StateVec basis(size_t k) {
        return StateVec(Ket4::basis(k));
    }

    const Ket4 &ket() const {
        return amplitudes_;
    }
    const Complex &operator[](size_t k) const {
        return amplitudes_[k];
    }
    operator const Ket4 &() const {
        return amplitudes_;
    }
    bool operator==(const StateVec &other) const = default;

   private:
    Ket4 amplitudes_;
};

/// M|psi>. Never renormalizes.
inline Ket4 apply(const Op4 &m, const Ket4 &psi) {
    return m * psi;
}

/// Singular value decomposition M = sum_k values[k] |left[k]><right[k]|.
struct Svd2 {
    std::array<double, 2> values;
    std::array<Ket2, 2> left;
    std::array<Ket2, 2> right;

    Matrix2 reconstruct() const;
};

/// Closed-form SVD of a 2x2 complex matrix, singular values descending.
/// The zero matrix yields values (0, 0) with standard bases.
Svd2 svd2(const Matrix2 &m);

std::string str(const Op2 &m);
std::string str(const Op4 &m);
std::string str(const Ket4 &v);

}  // namespace reltps

#endif
