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

#include "reltps/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "reltps/entanglement.h"

namespace reltps {

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

Ket2 bit_ket(int b) {
    return Ket2::basis(b);
}

Ket2 ket2(Complex a, Complex b) {
    return Ket2{{a, b}};
}

Op2 random_op2(Rng &rng) {
    std::normal_distribution<double> normal;
    Op2 m;
    for (auto &x : m.a) {
        double re = normal(rng);
        double im = normal(rng);
        x = Complex{re, im};
    }
    return m;
}

Op4 ket_projector(const Ket4 &k) {
    return Op4::outer(k, k);
}

const std::vector<std::string_view> &identities_for(std::string_view check_id) {
    for (const auto &entry : coverage_table()) {
        if (entry.check_id == check_id) {
            return entry.identities;
        }
    }
    throw std::logic_error("unknown check id");
}

/// Accumulates deviations and bounds for one check.
class Checker {
   public:
    Checker(std::string_view check_id, double tolerance) {
        result_.check_id = std::string(check_id);
        for (auto name : identities_for(check_id)) {
            result_.identities.emplace_back(name);
        }
        result_.tolerance = tolerance;
    }

    void record(double deviation) {
        // NaN sticks, so a non-finite computation can never pass.
        if (std::isnan(deviation) || std::isnan(result_.max_deviation)) {
            result_.max_deviation = std::numeric_limits<double>::quiet_NaN();
        } else {
            result_.max_deviation = std::max(result_.max_deviation, deviation);
        }
    }

    void record(const Op4 &actual, const Op4 &expected) {
        record(max_abs_diff(actual, expected));
    }

    void record(const Ket4 &actual, const Ket4 &expected) {
        record(max_abs_diff(actual, expected));
    }

    /// Treats a failed boolean condition as a unit deviation.
    void require(bool condition) {
        record(condition ? 0.0 : 1.0);
    }

    void bound(std::string name, double value, double threshold) {
        result_.bounds.push_back(Bound{std::move(name), value, threshold});
    }

    std::stringstream &details() {
        return details_;
    }

    CheckResult finish() {
        bool ok = result_.max_deviation < result_.tolerance;
        for (const auto &b : result_.bounds) {
            ok = ok && b.holds();
        }
        result_.passed = ok;
        result_.details = details_.str();
        return std::move(result_);
    }

   private:
    CheckResult result_;
    std::stringstream details_;
};

/// One row of the reference color-sum tables.
struct ColorSumRow {
    std::string_view table_key;
    Side side;
    int alpha;
    ColorChannel first;
    ColorChannel second;
    /// Empty where the table gives no annotation.
    std::string_view text;
};

using enum ColorChannel;
constexpr auto L = Side::Left;
constexpr auto R = Side::Right;

const std::array<ColorSumRow, 24> kColorSumTables = {{
    {"123", L, 0, C, M, proposition_text::kAlice0},
    {"123", L, 1, Y, G, proposition_text::kAlice1},
    {"123", R, 0, C, Y, proposition_text::kBob0},
    {"123", R, 1, M, G, proposition_text::kBob1},
    {"321", L, 0, C, G, proposition_text::kIff},
    {"321", L, 1, M, Y, proposition_text::kXor},
    {"321", R, 0, C, Y, proposition_text::kBob0},
    {"321", R, 1, M, G, proposition_text::kBob1},
    {"213", L, 0, C, Y, proposition_text::kBob0},
    {"213", L, 1, M, G, proposition_text::kBob1},
    {"213", R, 0, C, M, proposition_text::kAlice0},
    {"213", R, 1, Y, G, proposition_text::kAlice1},
    {"231", L, 0, C, G, proposition_text::kIff},
    {"231", L, 1, M, Y, proposition_text::kXor},
    {"231", R, 0, C, M, proposition_text::kAlice0},
    {"231", R, 1, Y, G, proposition_text::kAlice1},
    {"312", L, 0, C, Y, ""},
    {"312", L, 1, M, G, ""},
    {"312", R, 0, C, G, ""},
    {"312", R, 1, M, Y, ""},
    {"132", L, 0, C, M, ""},
    {"132", L, 1, Y, G, ""},
    {"132", R, 0, C, G, ""},
    {"132", R, 1, M, Y, ""},
}};

/// The table keys the two 3-cycles by the inverse of the permutation their U
/// matrices implement; every other label is self-inverse.
TpsLabel label_for_table_key(std::string_view key) {
    auto label = parse_label(key);
    if (!label) {
        throw std::logic_error("bad table key");
    }
    return inverse(*label);
}

Op4 color_projector(ColorChannel a, ColorChannel b) {
    return ket_projector(color_ket(a).ket()) + ket_projector(color_ket(b).ket());
}

}  // namespace

size_t VerificationReport::passed_count() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) {
        return c.passed;
    });
}

size_t VerificationReport::failed_count() const {
    return checks.size() - passed_count();
}

ProjectorSource library_projectors() {
    return [](TpsLabel label, Side side, int alpha) {
        return subsystem_projector(label, side, alpha).projector;
    };
}

const std::vector<CheckCoverage> &coverage_table() {
    static const std::vector<CheckCoverage> table = {
        {"permutation-unitaries",
         {"permutation-unitary-matrices", "color-basis-binary-labels", "tps-basis-kets", "tps123-is-kronecker",
          "local-bits-usual-rule", "u321-relabeling"}},
        {"marginal-rules",
         {"joint-probabilities", "marginal-probabilities", "marginal-projectors", "projector-matrix-rows-columns"}},
        {"projector-algebra",
         {"projector-color-tables", "proposition-labels", "projectors-commute", "swap-213-dictionary",
          "iff-231-dictionary"}},
        {"tps-laws",
         {"conjugation-law", "covariance-law", "composition-closure", "same-label-mixed-product",
          "mixed-label-counterexample"}},
        {"pauli-dictionary",
         {"pauli-dictionary-321", "iff-projector-matrix", "eigenvector-families-321",
          "sigma3-basis-cross-checks-321", "left-negation-equivalence-321", "swap-213-pauli"}},
        {"bell-truth-values", {"bell-truth-values-321"}},
        {"relative-entanglement",
         {"singlet-entangled-123", "singlet-product-321", "iff-family-dual-forms", "relative-classification"}},
        {"local-basis-change",
         {"local-basis-change-123", "local-basis-change-any-tps", "rotated-product-map", "local-change-homomorphism"}},
        {"singlet-identities",
         {"singlet-bell-form", "singlet-rotated-bell-form", "singlet-product-form-321",
          "singlet-rotated-product-form-321", "singlet-rotated-basis-forms", "singlet-eigen-321-sigma3",
          "singlet-eigen-321-sigma1", "singlet-eigen-231-sigma3", "singlet-eigen-231-sigma1",
          "singlet-eigen-321-joint", "singlet-eigen-231-joint", "singlet-factorization-321",
          "singlet-factorization-231", "singlet-rotated-joint-eigen"}},
        {"uniqueness-theorem", {"uniqueness-theorem", "epr-chain-123", "epr-chain-321", "epr-chain-231"}},
    };
    return table;
}

CheckResult check_permutation_unitaries() {
    Checker c("permutation-unitaries", kExactTolerance);
    for (auto label : kAllLabels) {
        Op4 u = perm_unitary(label);
        c.record(u, perm_unitary_from_definition(label));
        c.record(u.adjoint() * u, Op4::identity());
        auto d = label_digits(label);
        std::array<int, 4> image = {0, d[0], d[1], d[2]};
        for (int r = 0; r < 2; r++) {
            for (int s = 0; s < 2; s++) {
                // |rs_abc> is |0>, |a>, |b>, |c>.
                c.record(basis_ket(label, r, s).ket(), Ket4::basis(image[2 * r + s]));
            }
        }
        // Local bits by the row (left) and column (right) sums.
        for (int alpha = 0; alpha < 2; alpha++) {
            Op4 rows = ket_projector(basis_ket(label, alpha, 0).ket()) + ket_projector(basis_ket(label, alpha, 1).ket());
            Op4 cols = ket_projector(basis_ket(label, 0, alpha).ket()) + ket_projector(basis_ket(label, 1, alpha).ket());
            c.record(tensor_op(label, pauli::projector(alpha), Op2::identity()), rows);
            c.record(tensor_op(label, Op2::identity(), pauli::projector(alpha)), cols);
        }
    }
    for (auto color : kAllColors) {
        int k = static_cast<int>(color);
        c.record(color_ket(color).ket(), kron(bit_ket(k / 2), bit_ket(k % 2)));
    }
    for (int r = 0; r < 2; r++) {
        for (int s = 0; s < 2; s++) {
            c.record(basis_ket(TpsLabel::L123, r, s).ket(), kron(bit_ket(r), bit_ket(s)));
            c.record(tensor_ket(TpsLabel::L123, bit_ket(r), bit_ket(s)), kron(bit_ket(r), bit_ket(s)));
        }
    }
    c.record(perm_unitary(TpsLabel::L123), Op4::identity());

    // U_321 = |00><00| + |01><11| + |10><10| + |11><01|: a CNOT on the left bit
    // controlled by the right bit.
    auto e = [](int k) {
        return Ket4::basis(k);
    };
    Op4 u321 = Op4::outer(e(0), e(0)) + Op4::outer(e(1), e(3)) + Op4::outer(e(2), e(2)) + Op4::outer(e(3), e(1));
    c.record(perm_unitary(TpsLabel::L321), u321);
    Op4 cnot;
    for (int r = 0; r < 2; r++) {
        for (int s = 0; s < 2; s++) {
            cnot(2 * (r ^ s) + s, 2 * r + s) = 1;
        }
    }
    c.record(u321, cnot);
    std::array<int, 4> relabel = {0, 3, 2, 1};
    for (int k = 0; k < 4; k++) {
        c.record(u321 * ket_projector(e(k)) * u321.adjoint(), ket_projector(e(relabel[k])));
    }
    c.details() << "6 hard-coded permutation matrices agree with (0,1,2,3)->(0,a,b,c); "
                << "|rs_abc> = U_abc|2r+s>; 123 product = Kronecker product; U_321 = CNOT(right -> left).";
    return c.finish();
}

CheckResult check_marginal_rules(Rng &rng) {
    Checker c("marginal-rules", kExactTolerance);
    Op4 p[2][2];
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            p[a][b] = kron(pauli::projector(a), pauli::projector(b));
            c.record(p[a][b], ket_projector(kron(bit_ket(a), bit_ket(b))));
        }
    }
    const Op2 id = Op2::identity();
    for (int a = 0; a < 2; a++) {
        // Row sums give the left bit, column sums the right bit.
        c.record(kron(pauli::projector(a), id), p[a][0] + p[a][1]);
        c.record(kron(id, pauli::projector(a)), p[0][a] + p[1][a]);
    }
    const int n_states = 20;
    for (int t = 0; t < n_states; t++) {
        StateVec psi = random_state(rng);
        auto expect = [&](const Op4 &m) {
            return inner(psi.ket(), m * psi.ket()).real();
        };
        double joint[2][2];
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                joint[a][b] = expect(p[a][b]);
                c.record(std::abs(joint[a][b] - std::norm(psi[2 * a + b])));
            }
        }
        for (int a = 0; a < 2; a++) {
            c.record(std::abs(joint[a][0] + joint[a][1] - expect(kron(pauli::projector(a), id))));
            c.record(std::abs(joint[0][a] + joint[1][a] - expect(kron(id, pauli::projector(a)))));
        }
    }
    c.details() << "P_ab = P_a (x) P_b; marginals as row/column sums on " << n_states << " random states.";
    return c.finish();
}

CheckResult check_projector_algebra(const ProjectorSource &projectors) {
    Checker c("projector-algebra", kExactTolerance);

    for (const auto &row : kColorSumTables) {
        TpsLabel label = label_for_table_key(row.table_key);
        Op4 actual = projectors(label, row.side, row.alpha);
        c.record(actual, color_projector(row.first, row.second));
        if (!row.text.empty()) {
            c.require(subsystem_projector(label, row.side, row.alpha).text == row.text);
        }
    }

    std::vector<Op4> all;
    for (auto label : kAllLabels) {
        for (auto side : {Side::Left, Side::Right}) {
            Op4 p0 = projectors(label, side, 0);
            Op4 p1 = projectors(label, side, 1);
            c.record(p0 + p1, Op4::identity());
            for (const Op4 &p : {p0, p1}) {
                c.record(p * p, p);
                c.record(p.adjoint(), p);
                c.record(std::abs(p.trace() - Complex{2}));
                all.push_back(p);
            }
        }
    }
    double commute = 0;
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = i + 1; j < all.size(); j++) {
            commute = std::max(commute, commutator_defect(all[i], all[j]));
        }
    }
    c.record(commute);

    // Swapping Alice and Bob.
    for (int a = 0; a < 2; a++) {
        c.record(projectors(TpsLabel::L213, L, a), projectors(TpsLabel::L123, R, a));
        c.record(projectors(TpsLabel::L213, R, a), projectors(TpsLabel::L123, L, a));
    }
    // The IFF-carrying partner of 213: left bit shared with 321, right bit with
    // Alice of 123.
    TpsLabel partner = label_for_table_key("231");
    for (int a = 0; a < 2; a++) {
        c.record(projectors(partner, R, a), projectors(TpsLabel::L123, L, a));
        c.record(projectors(partner, R, a), projectors(TpsLabel::L213, R, a));
        c.record(projectors(partner, L, a), projectors(TpsLabel::L321, L, a));
    }

    c.details() << "24 projectors vs reference color sums (rows keyed '231' and '312' describe the "
                << "U_312 and U_231 wirings respectively); idempotent, hermitian, trace 2, P_0 + P_1 = I; "
                << all.size() * (all.size() - 1) / 2 << " pairs commute (max commutator " << commute << ").";
    return c.finish();
}

CheckResult check_tps_laws(Rng &rng) {
    Checker c("tps-laws", kExactTolerance);

    for (auto outer : kAllLabels) {
        for (auto inner_label : kAllLabels) {
            TpsLabel product = compose(outer, inner_label);
            c.record(perm_unitary(product), perm_unitary(outer) * perm_unitary(inner_label));
        }
    }

    const int n_quadruples = 100;
    for (int t = 0; t < n_quadruples; t++) {
        Op2 a = random_op2(rng);
        Op2 b = random_op2(rng);
        Op2 cc = random_op2(rng);
        Op2 d = random_op2(rng);
        for (auto label : kAllLabels) {
            // Entry-wise route: sum A_ru B_sv |rs_abc><uv_abc|.
            Op4 direct;
            for (int r = 0; r < 2; r++) {
                for (int s = 0; s < 2; s++) {
                    for (int u = 0; u < 2; u++) {
                        for (int v = 0; v < 2; v++) {
                            direct = direct + Op4::outer(basis_ket(label, r, s).ket(), basis_ket(label, u, v).ket()) *
                                                  (a(r, u) * b(s, v));
                        }
                    }
                }
            }
            c.record(tensor_op(label, a, b), direct);
            c.record(tensor_op(label, a, b) * tensor_op(label, cc, d), tensor_op(label, a * cc, b * d));
            for (auto outer : kAllLabels) {
                Op4 u = perm_unitary(outer);
                c.record(tensor_op(compose(outer, label), a, b), u * tensor_op(label, a, b) * u.adjoint());
            }
        }
    }

    const Op2 id = Op2::identity();
    double defect = mixed_product_defect(TpsLabel::L123, TpsLabel::L321, pauli::z(), id, id, pauli::x());
    c.bound("mixed_product_defect(123, 321, s3, I, I, s1)", defect, 0.01);
    double flat = mixed_product_defect(TpsLabel::L123, TpsLabel::L321, pauli::x(), pauli::z(), pauli::x(), pauli::z());
    c.details() << "36 compositions closed; conjugation, covariance and same-label product law on " << n_quadruples
                << " random quadruples x 6 labels; (s3 (x) I)(I (x)_321 s1) is no single (x)_abc product (defect "
                << defect << "); the quadruple (s1, s3, s1, s3) has defect " << flat
                << " since s1 (x)_321 s3 = s1 (x) s3.";
    return c.finish();
}

CheckResult check_pauli_dictionary() {
    Checker c("pauli-dictionary", kExactTolerance);
    const Op2 id = Op2::identity();
    const Op2 x = pauli::x();
    const Op2 z = pauli::z();
    const auto L321 = TpsLabel::L321;

    c.record(tensor_op(L321, id, z), kron(id, z));
    c.record(tensor_op(L321, id, x), kron(x, x));
    c.record(tensor_op(L321, x, id), kron(x, id));
    c.record(tensor_op(L321, z, id), kron(z, z));

    // P_0 (x)_321 I = (I + s3 (x) s3)/2 = P_00 + P_11.
    Op4 p0 = tensor_op(L321, pauli::projector(0), id);
    c.record(p0, (Op4::identity() + kron(z, z)) * 0.5);
    c.record(p0, Op4::diagonal({1, 0, 0, 1}));
    c.record(p0, tensor_op(L321, (id + z) * 0.5, id));

    // Eigenvector families f_par = f00|00> + f11|11>, f_perp = f01|01> + f10|10>.
    auto e = [](int k) {
        return Ket4::basis(k);
    };
    const double f_a = 0.6;
    const double f_b = 0.8;
    Ket4 f_par = e(0) * f_a + e(3) * f_b;
    Ket4 f_perp = e(1) * f_a + e(2) * f_b;
    auto ket321 = [&](int r, int s) {
        return basis_ket(L321, r, s).ket();
    };
    c.record(f_par, ket321(0, 0) * f_a + ket321(0, 1) * f_b);
    c.record(f_perp, ket321(1, 1) * f_a + ket321(1, 0) * f_b);
    Op4 p1 = tensor_op(L321, pauli::projector(1), id);
    Op4 s3_321 = tensor_op(L321, z, id);
    c.record(p0 * f_par, f_par);
    c.record(p1 * f_par, Ket4{});
    c.record((p0 - p1) * f_par, f_par);
    c.record(s3_321 * f_par, f_par);
    c.record(p0 * f_perp, Ket4{});
    c.record(p1 * f_perp, f_perp);
    c.record((p0 - p1) * f_perp, f_perp * -1.0);
    c.record(s3_321 * f_perp, f_perp * -1.0);

    // (s3 (x)_321 I)|rs_321> = +-|rs_321> = (s3 (x) s3)|rs_321>.
    const std::array<std::array<int, 3>, 4> signs = {{{0, 0, 1}, {0, 1, 1}, {1, 1, -1}, {1, 0, -1}}};
    for (const auto &[r, s, sign] : signs) {
        Ket4 k = ket321(r, s);
        c.record(s3_321 * k, k * static_cast<double>(sign));
        c.record(kron(z, z) * k, k * static_cast<double>(sign));
    }
    c.record(ket321(0, 1), e(3));
    c.record(ket321(1, 1), e(1));
    c.record(ket321(1, 0), e(2));

    // Two forms of the left negation.
    Op4 x_321 = tensor_op(L321, x, id);
    c.record(x_321 * (ket321(0, 0) * f_a + ket321(0, 1) * f_b), ket321(1, 0) * f_a + ket321(1, 1) * f_b);
    c.record(kron(x, id) * f_par, e(2) * f_a + e(1) * f_b);
    c.record(e(2) * f_a + e(1) * f_b, ket321(1, 0) * f_a + ket321(1, 1) * f_b);

    // s_mu (x)_213 s_nu = s_nu (x) s_mu.
    const std::array<Op2, 4> sigma = {id, x, pauli::y(), z};
    for (const auto &mu : sigma) {
        for (const auto &nu : sigma) {
            c.record(tensor_op(TpsLabel::L213, mu, nu), kron(nu, mu));
        }
    }
    c.details() << "four 321 Pauli identities; P_0 (x)_321 I = diag(1,0,0,1); eigen-families with f = (" << f_a
                << ", " << f_b << "); basis cross-checks; left-negation forms; 16 swapped 213 Pauli products.";
    return c.finish();
}

CheckResult check_bell_truth_values() {
    Checker c("bell-truth-values", kExactTolerance);
    const Op2 id = Op2::identity();
    Op4 p0 = tensor_op(TpsLabel::L321, pauli::projector(0), id);
    Op4 p1 = tensor_op(TpsLabel::L321, pauli::projector(1), id);
    for (auto kind : {BellKind::PsiMinus, BellKind::PsiPlus}) {
        Ket4 psi = bell(kind).ket();
        c.record(p0 * psi, Ket4{});
        c.record(p1 * psi, psi);
    }
    for (auto kind : {BellKind::PhiMinus, BellKind::PhiPlus}) {
        Ket4 phi = bell(kind).ket();
        c.record(p0 * phi, phi);
        c.record(p1 * phi, Ket4{});
    }
    Ket4 mix = (bell(BellKind::PsiPlus).ket() + bell(BellKind::PhiPlus).ket()) * kInvSqrt2;
    double expectation = inner(mix, p0 * mix).real();
    c.record(std::abs(expectation - 0.5));
    c.details() << "P_a (x)_321 I on Psi_+-, Phi_+-; <P_0 (x)_321 I> = " << expectation
                << " on (Psi_+ + Phi_+)/sqrt2.";
    return c.finish();
}

CheckResult check_relative_entanglement() {
    Checker c("relative-entanglement", kExactTolerance);
    StateVec singlet = bell(BellKind::PsiMinus);

    Matrix2 m123 = coefficient_matrix(singlet, TpsLabel::L123);
    Matrix2 m321 = coefficient_matrix(singlet, TpsLabel::L321);
    Matrix2 want123;
    want123(0, 1) = kInvSqrt2;
    want123(1, 0) = -kInvSqrt2;
    Matrix2 want321;
    want321(1, 0) = -kInvSqrt2;
    want321(1, 1) = kInvSqrt2;
    c.record(max_abs_diff(m123, want123));
    c.record(max_abs_diff(m321, want321));

    auto classification = classify_all(singlet);
    std::stringstream summary;
    for (const auto &entry : classification.entries) {
        bool entangled = entry.label == TpsLabel::L123 || entry.label == TpsLabel::L213;
        std::array<double, 2> want = entangled ? std::array<double, 2>{kInvSqrt2, kInvSqrt2}
                                               : std::array<double, 2>{1.0, 0.0};
        c.require(entry.schmidt.rank == (entangled ? 2 : 1));
        c.record(std::abs(entry.schmidt.coefficients[0] - want[0]));
        c.record(std::abs(entry.schmidt.coefficients[1] - want[1]));
        summary << label_name(entry.label) << "=" << separability_name(entry.separability) << " ";
    }
    // |1> (x)_321 (|1> - |0>)/sqrt2.
    const auto &s321 = classification.at(TpsLabel::L321).schmidt;
    c.record(phase_distance(s321.left_basis[0], bit_ket(1)));
    c.record(phase_distance(s321.right_basis[0], ket2(-kInvSqrt2, kInvSqrt2)));
    c.record(phase_distance(s321.reconstruct(), singlet.ket()));

    // f00|00> + f11|11> is |0> (x)_321 (f00|0> + f11|1>).
    const double f_a = 0.6;
    const double f_b = 0.8;
    StateVec f_par(Ket4::basis(0) * f_a + Ket4::basis(3) * f_b);
    c.record(tensor_ket(TpsLabel::L321, bit_ket(0), ket2(f_a, f_b)), f_par.ket());
    auto par321 = schmidt(f_par, TpsLabel::L321);
    auto par123 = schmidt(f_par, TpsLabel::L123);
    c.require(par321.rank == 1 && par123.rank == 2);
    c.record(std::abs(par123.coefficients[0] - f_b));
    c.record(std::abs(par123.coefficients[1] - f_a));
    StateVec f_perp(Ket4::basis(1) * f_a + Ket4::basis(2) * f_b);
    c.record(tensor_ket(TpsLabel::L321, bit_ket(1), ket2(f_b, f_a)), f_perp.ket());
    c.require(schmidt(f_perp, TpsLabel::L321).rank == 1 && schmidt(f_perp, TpsLabel::L123).rank == 2);

    c.details() << "singlet: " << summary.str() << "(rank threshold " << kRankThreshold
                << "); IFF eigenvectors entangled under 123, product under 321.";
    return c.finish();
}

CheckResult check_local_basis_change(size_t n_samples, Rng &rng) {
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    Checker c("local-basis-change", kSampledTolerance);
    for (size_t t = 0; t < n_samples; t++) {
        Op2 v = haar_su2(rng);
        Op2 w = haar_su2(rng);
        Op4 vw = kron(v, w);
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                // |a_V b_W 123> = |a_V> (x) |b_W>, P_{a_V b_W} = P_{a_V} (x) P_{b_W}.
                Ket4 rotated = local_change(v, w, kron(bit_ket(a), bit_ket(b)));
                c.record(rotated, kron(v * bit_ket(a), w * bit_ket(b)));
                Op2 pa = v * pauli::projector(a) * v.adjoint();
                Op2 pb = w * pauli::projector(b) * w.adjoint();
                c.record(local_change(v, w, kron(pauli::projector(a), pauli::projector(b))), kron(pa, pb));
            }
        }
        for (auto label : kAllLabels) {
            Op4 sum;
            std::vector<Op4> family;
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    Ket4 k = basis_ket(label, a, b).ket();
                    Op4 rotated = ket_projector(vw * k);
                    c.record(local_change(v, w, ket_projector(k)), rotated);
                    c.record(local_change(v, w, tensor_op(label, pauli::projector(a), pauli::projector(b))), rotated);
                    family.push_back(rotated);
                    sum = sum + rotated;
                }
            }
            c.record(sum, Op4::identity());
            for (size_t i = 0; i < family.size(); i++) {
                for (size_t j = i + 1; j < family.size(); j++) {
                    c.record(family[i] * family[j], Op4{});
                }
            }

            Op2 a = haar_su2(rng) * Complex{0.7, 0.2};
            Op2 b = haar_su2(rng) + pauli::z();
            Op4 x = tensor_op(label, a, b);
            Op4 y = tensor_op(label, b, a);
            c.record(local_change(v, w, x * y), local_change(v, w, x) * local_change(v, w, y));
            c.record(local_change(v, w, x.adjoint()), local_change(v, w, x).adjoint());
            Op4 same = tensor_op(label, v, w);
            c.record(same * x * same.adjoint(), tensor_op(label, v * a * v.adjoint(), w * b * w.adjoint()));
            if (label == TpsLabel::L123) {
                c.record(local_change(v, w, x), kron(v * a * v.adjoint(), w * b * w.adjoint()));
            }
        }
    }
    c.details() << n_samples << " Haar pairs (V, W): (V (x) W) P_{ab,abc} (V (x) W)^dag is the projector on "
                << "(V (x) W)|ab_abc> for all six products; the rotated families are complete and orthogonal.";
    return c.finish();
}

CheckResult check_singlet_identities(size_t n_samples, Rng &rng) {
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    Checker c("singlet-identities", kSampledTolerance);
    const Op2 id = Op2::identity();
    const Op2 x = pauli::x();
    const Op2 z = pauli::z();
    const Ket4 singlet = bell(BellKind::PsiMinus).ket();
    const Ket2 zero = bit_ket(0);
    const Ket2 one = bit_ket(1);
    const Ket2 diff = one - zero;
    double exact = 0;
    auto exact_record = [&](double dev) {
        exact = std::max(exact, dev);
        c.record(dev);
    };

    exact_record(max_abs_diff((kron(zero, one) - kron(one, zero)) * kInvSqrt2, singlet));
    exact_record(max_abs_diff(
        (tensor_ket(TpsLabel::L123, zero, one) - tensor_ket(TpsLabel::L123, one, zero)) * kInvSqrt2, singlet));
    Ket4 product321 = tensor_ket(TpsLabel::L321, one, diff) * kInvSqrt2;
    exact_record(max_abs_diff(product321, singlet));
    exact_record(max_abs_diff(
        (basis_ket(TpsLabel::L321, 1, 1).ket() - basis_ket(TpsLabel::L321, 1, 0).ket()) * kInvSqrt2, singlet));

    // Eigen-relations.
    exact_record(max_abs_diff(tensor_op(TpsLabel::L321, z, id) * singlet, singlet * -1.0));
    exact_record(max_abs_diff(tensor_op(TpsLabel::L321, id, x) * singlet, singlet * -1.0));
    exact_record(max_abs_diff(tensor_op(TpsLabel::L231, id, z) * singlet, singlet * -1.0));
    exact_record(max_abs_diff(tensor_op(TpsLabel::L231, x, id) * singlet, singlet * -1.0));
    exact_record(max_abs_diff(tensor_op(TpsLabel::L321, z, x) * singlet, singlet));
    exact_record(max_abs_diff(tensor_op(TpsLabel::L231, x, z) * singlet, singlet));

    // |Psi_-> ~ |-_3> (x)_321 |-_1> ~ |-_1> (x)_231 |-_3>.
    Ket2 minus3 = one;
    Ket2 minus1 = (zero - one) * kInvSqrt2;
    exact_record(phase_distance(tensor_ket(TpsLabel::L321, minus3, minus1), singlet));
    exact_record(phase_distance(tensor_ket(TpsLabel::L231, minus1, minus3), singlet));

    double sampled = 0;
    for (size_t t = 0; t < n_samples; t++) {
        Op2 v = haar_su2(rng);
        Ket2 zero_v = v * zero;
        Ket2 one_v = v * one;
        auto rec = [&](double dev) {
            sampled = std::max(sampled, dev);
            c.record(dev);
        };
        Ket4 rotated_bell = (kron(zero_v, one_v) - kron(one_v, zero_v)) * kInvSqrt2;
        rec(max_abs_diff(rotated_bell, singlet));
        Ket4 rotated_basis = local_change(
            v, v, (basis_ket(TpsLabel::L321, 1, 1).ket() - basis_ket(TpsLabel::L321, 1, 0).ket()) * kInvSqrt2);
        rec(max_abs_diff(rotated_basis, rotated_bell));
        Ket4 rotated_product = local_change(v, v, product321);
        rec(max_abs_diff(rotated_product, singlet));
        rec(max_abs_diff(rotated_product, product321));
        Op4 joint = local_change(v, v, tensor_op(TpsLabel::L321, z, x));
        rec(max_abs_diff(joint * singlet, singlet));
    }
    c.details() << "constant forms and eigen-relations max deviation " << exact << "; " << n_samples
                << " Haar V for the rotated forms (V (x)_123 V applied to the unrotated product), max deviation "
                << sampled << ".";
    return c.finish();
}

double max_invariance_distance(const Ket4 &psi, size_t n_samples, Rng &rng) {
    double worst = 0;
    for (size_t t = 0; t < n_samples; t++) {
        Op2 v = haar_su2(rng);
        worst = std::max(worst, phase_distance(kron(v, v) * psi, psi));
    }
    return worst;
}

CheckResult check_uniqueness_theorem(size_t n_samples, Rng &rng) {
    if (n_samples < 10) {
        throw std::invalid_argument("n_samples must be at least 10");
    }
    Checker c("uniqueness-theorem", kSampledTolerance);
    const Ket4 singlet = bell(BellKind::PsiMinus).ket();

    double singlet_worst = max_invariance_distance(singlet, n_samples, rng);
    c.record(singlet_worst);

    const int n_states = 100;
    const size_t n_rotations = 50;
    double weakest = std::numeric_limits<double>::infinity();
    for (int t = 0; t < n_states; t++) {
        Ket4 psi = random_state(rng).ket();
        psi = psi - singlet * inner(singlet, psi);
        psi = StateVec::normalized(psi).ket();
        weakest = std::min(weakest, max_invariance_distance(psi, n_rotations, rng));
    }
    c.bound("min over states orthogonal to the singlet of max phase distance under V (x) V", weakest, 1e-3);

    // EPR chain, with |+_3> = |0>, |-_3> = |1>.
    const Ket2 plus3 = bit_ket(0);
    const Ket2 minus3 = bit_ket(1);
    double chain = 0;
    auto rec = [&](const Ket4 &form) {
        double d = phase_distance(form, singlet);
        chain = std::max(chain, d);
        c.record(d);
    };
    Ket4 bell_form = (kron(minus3, plus3) - kron(plus3, minus3)) * kInvSqrt2;
    Ket4 product_321 = tensor_ket(TpsLabel::L321, minus3, minus3 - plus3) * kInvSqrt2;
    Ket4 product_231 = tensor_ket(TpsLabel::L231, minus3 - plus3, minus3) * kInvSqrt2;
    rec(bell_form);
    rec(product_321);
    rec(product_231);
    for (size_t t = 0; t < n_samples; t++) {
        Op2 v = haar_su2(rng);
        Ket2 plus_v = v * plus3;
        Ket2 minus_v = v * minus3;
        rec((kron(minus_v, plus_v) - kron(plus_v, minus_v)) * kInvSqrt2);
        rec(local_change(v, v, product_321));
        rec(local_change(v, v, product_231));
    }

    c.details() << "singlet max phase distance " << singlet_worst << " over " << n_samples << " Haar V; "
                << n_states << " states orthogonal to it each move by at least " << weakest << " within "
                << n_rotations << " samples; EPR chain max phase distance " << chain << ".";
    return c.finish();
}

Rng check_rng(uint64_t seed, size_t index) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed & 0xFFFFFFFFu),
        static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(index),
    };
    return Rng(seq);
}

VerificationReport run_all(uint64_t seed, const VerifyOptions &options) {
    VerificationReport report;
    report.seed = seed;
    size_t index = 0;
    auto next_rng = [&]() {
        return check_rng(seed, index++);
    };
    auto guarded = [&](std::string_view id, auto &&fn) {
        try {
            report.checks.push_back(fn());
        } catch (const std::exception &ex) {
            CheckResult failed;
            failed.check_id = std::string(id);
            for (auto name : identities_for(id)) {
                failed.identities.emplace_back(name);
            }
            failed.max_deviation = std::numeric_limits<double>::quiet_NaN();
            failed.details = std::string("exception: ") + ex.what();
            report.checks.push_back(std::move(failed));
        }
    };

    guarded("permutation-unitaries", [&] {
        next_rng();
        return check_permutation_unitaries();
    });
    guarded("marginal-rules", [&] {
        auto rng = next_rng();
        return check_marginal_rules(rng);
    });
    guarded("projector-algebra", [&] {
        next_rng();
        return check_projector_algebra(options.projectors);
    });
    guarded("tps-laws", [&] {
        auto rng = next_rng();
        return check_tps_laws(rng);
    });
    guarded("pauli-dictionary", [&] {
        next_rng();
        return check_pauli_dictionary();
    });
    guarded("bell-truth-values", [&] {
        next_rng();
        return check_bell_truth_values();
    });
    guarded("relative-entanglement", [&] {
        next_rng();
        return check_relative_entanglement();
    });
    guarded("local-basis-change", [&] {
        auto rng = next_rng();
        return check_local_basis_change(options.samples, rng);
    });
    guarded("singlet-identities", [&] {
        auto rng = next_rng();
        return check_singlet_identities(options.samples, rng);
    });
    guarded("uniqueness-theorem", [&] {
        auto rng = next_rng();
        return check_uniqueness_theorem(options.samples, rng);
    });
    return report;
}

}  // namespace reltps
