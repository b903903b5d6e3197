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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reltps/cli.h"
#include "reltps/entanglement.h"
#include "reltps/io.h"
#include "reltps/sim.h"
#include "reltps/states.h"
#include "reltps/tps.h"
#include "reltps/verify.h"

using namespace reltps;

namespace {

constexpr uint64_t kSeed = 0;

// Pinned tolerances and sizes.
constexpr double kExactTol = 1e-12;
constexpr double kSampledTol = 1e-10;
constexpr size_t kHaarSamples = 100;
constexpr double kNonInvariantFloor = 1e-3;
constexpr double kUniquenessSeconds = 5.0;
constexpr double kSchmidtTol = 1e-10;
constexpr int kPurityStates = 1000;
constexpr double kPurityTol = 1e-10;
constexpr double kPuritySideTol = 1e-12;
constexpr uint64_t kSingletShots = 1000000;
constexpr double kSingletFreqTol = 0.005;
constexpr uint64_t kBridgeShots = 100000;
constexpr double kBridgeSigmas = 6;
constexpr double kCounterexampleFloor = 0.01;
constexpr int kSameLabelQuadruples = 100;
constexpr double kSameLabelTol = 1e-12;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

Outcome ac1_identity_suite() {
    std::ostringstream out, err;
    int code = run_cli({"verify", "--seed", std::to_string(kSeed), "--format", "json"}, out, err);
    Json doc = Json::parse(out.str());
    bool ok = code == 0;
    double worst_exact = 0, worst_sampled = 0;
    for (const auto &c : doc["checks"]) {
        double tol = c["tolerance"];
        bool exact = tol == kExactTolerance;
        if (c["max_deviation"].is_null()) {
            ok = false;
            continue;
        }
        double dev = c["max_deviation"];
        ok = ok && c["passed"].get<bool>() && dev < (exact ? kExactTol : kSampledTol);
        (exact ? worst_exact : worst_sampled) = std::max(exact ? worst_exact : worst_sampled, dev);
    }
    return {ok, "exit " + std::to_string(code) + ", " + std::to_string(doc["checks"].size()) +
                    " checks, max exact dev " + num(worst_exact) + ", max sampled dev " + num(worst_sampled)};
}

Outcome ac2_uniqueness() {
    auto start = std::chrono::steady_clock::now();
    Rng rng = check_rng(kSeed, 9);
    CheckResult c = check_uniqueness_theorem(kHaarSamples, rng);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double weakest = c.bounds.empty() ? 0 : c.bounds[0].value;
    bool ok = c.max_deviation < kSampledTol && weakest > kNonInvariantFloor && seconds < kUniquenessSeconds;
    return {ok, "singlet/EPR max dev " + num(c.max_deviation) + ", weakest non-singlet move " + num(weakest) +
                    ", " + num(seconds) + " s"};
}

Outcome ac3_relative_entanglement() {
    const double h = 1 / std::sqrt(2.0);
    // 123, 213 entangled; 321, 231 product; 312, 132 from the oracle: product.
    auto c = classify_all(bell(BellKind::PsiMinus));
    bool ok = true;
    std::string summary;
    for (const auto &e : c.entries) {
        bool entangled = e.label == TpsLabel::L123 || e.label == TpsLabel::L213;
        double c0 = entangled ? h : 1, c1 = entangled ? h : 0;
        ok = ok && e.schmidt.rank == (entangled ? 2 : 1) && std::abs(e.schmidt.coefficients[0] - c0) < kSchmidtTol &&
             std::abs(e.schmidt.coefficients[1] - c1) < kSchmidtTol;
        summary += std::string(label_name(e.label)) + ":" + std::to_string(e.schmidt.rank) + " ";
    }
    return {ok, "ranks " + summary};
}

Outcome ac4_purity_oracle() {
    Rng rng(kSeed);
    double worst = 0, worst_side = 0;
    for (int t = 0; t < kPurityStates; t++) {
        StateVec psi = random_state(rng);
        for (auto l : kAllLabels) {
            auto s = schmidt(psi, l);
            double want = std::pow(s.coefficients[0], 4) + std::pow(s.coefficients[1], 4);
            double left = reduced_purity(psi, l, Side::Left);
            double right = reduced_purity(psi, l, Side::Right);
            worst = std::max(worst, std::abs(left - want));
            worst_side = std::max(worst_side, std::abs(left - right));
        }
    }
    return {worst < kPurityTol && worst_side < kPuritySideTol,
            "max |purity - sum c^4| " + num(worst) + ", max |left - right| " + num(worst_side)};
}

Outcome ac5_sampler() {
    auto singlet = sample_counts({bell(BellKind::PsiMinus), TpsLabel::L123, kSingletShots, kSeed});
    double f01 = singlet.joint_frequency(0, 1);
    bool ok = singlet.joint[0] == 0 && singlet.joint[3] == 0 && std::abs(f01 - 0.5) < kSingletFreqTol;
    std::string detail = "n00=" + std::to_string(singlet.joint[0]) + " n11=" + std::to_string(singlet.joint[3]) +
                         " f01=" + num(f01) + "; bridge z:";
    std::vector<StateVec> states = {bell(BellKind::PsiMinus), bell(BellKind::PhiPlus), uniform_state()};
    for (size_t k = 0; k < states.size(); k++) {
        auto a = correlation_stats(sample_counts({states[k], TpsLabel::L123, kBridgeShots, kSeed + 1 + k}));
        auto b = correlation_stats(sample_counts({states[k], TpsLabel::L321, kBridgeShots, kSeed + 11 + k}));
        double se = std::sqrt(a.iff_freq * (1 - a.iff_freq) / kBridgeShots +
                              b.left_bias * (1 - b.left_bias) / kBridgeShots);
        double diff = std::abs(a.iff_freq - b.left_bias);
        ok = ok && diff <= kBridgeSigmas * se;
        detail += " " + (se > 0 ? num(diff / se) : num(diff));
    }
    return {ok, detail};
}

Outcome ac6_mixed_product() {
    const Op2 s1 = pauli::x(), s3 = pauli::z();
    double defect = mixed_product_defect(TpsLabel::L123, TpsLabel::L321, s1, s3, s1, s3);
    Rng rng(kSeed);
    std::normal_distribution<double> normal;
    auto random_op = [&] {
        Op2 m;
        for (auto &x : m.a) {
            double re = normal(rng);
            double im = normal(rng);
            x = Complex{re, im};
        }
        return m;
    };
    double worst_same = 0;
    for (int t = 0; t < kSameLabelQuadruples; t++) {
        Op2 a = random_op(), b = random_op(), c = random_op(), d = random_op();
        for (auto l : kAllLabels) {
            worst_same = std::max(worst_same, mixed_product_defect(l, l, a, b, c, d));
        }
    }
    return {defect > kCounterexampleFloor && worst_same < kSameLabelTol,
            "defect(123, 321, s1, s3, s1, s3) = " + num(defect) + " (needs > 0.01), max same-label defect " +
                num(worst_same)};
}

std::string strip_timestamp(const std::string &text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.find("\"timestamp\"") == std::string::npos) {
            out += line + "\n";
        }
    }
    return out;
}

Outcome ac7_determinism() {
    std::ostringstream a, b, err;
    run_cli({"verify", "--seed", std::to_string(kSeed)}, a, err);
    run_cli({"verify", "--seed", std::to_string(kSeed)}, b, err);
    std::string sa = strip_timestamp(a.str()), sb = strip_timestamp(b.str());
    bool has_stamp = a.str().find("\"timestamp\"") != std::string::npos;
    return {sa == sb && has_stamp && !sa.empty(), std::to_string(sa.size()) + " bytes compared"};
}

}  // namespace

int main() {
    std::cout << "acceptance seed " << kSeed << "\n";
    struct Criterion {
        const char *name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"AC1 identity suite", ac1_identity_suite},
        {"AC2 uniqueness theorem", ac2_uniqueness},
        {"AC3 relative-entanglement table", ac3_relative_entanglement},
        {"AC4 purity oracle equivalence", ac4_purity_oracle},
        {"AC5 sampler statistics", ac5_sampler},
        {"AC6 mixed-product counterexample", ac6_mixed_product},
        {"AC7 determinism", ac7_determinism},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Outcome o = c.run();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << "\n";
    }
    std::cout << (7 - failed) << "/7 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
