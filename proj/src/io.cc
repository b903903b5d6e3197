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

#include "reltps/io.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "reltps/states.h"

namespace reltps {

namespace {

const char *kOutcomes[4] = {"00", "01", "10", "11"};

std::string fmt(const char *pattern, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, x);
    return buf;
}

Json ket2_to_json(const Ket2 &v) {
    return Json::array({complex_to_json(v[0]), complex_to_json(v[1])});
}

std::string support_text(std::array<int, 2> support) {
    std::string out = "P_";
    out += color_letter(static_cast<ColorChannel>(support[0]));
    out += " + P_";
    out += color_letter(static_cast<ColorChannel>(support[1]));
    return out;
}

std::string projector_name(TpsLabel label, Side side, int alpha) {
    std::string p = "P_" + std::to_string(alpha);
    std::string sub = "⊗_" + std::string(label_name(label)) + " ";
    if (side == Side::Left) {
        return p + sub + "I";
    }
    return "I" + sub + p;
}

}  // namespace

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json ket_to_json(const Ket4 &v) {
    Json out = Json::array();
    for (const auto &z : v.v) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

StateVec parse_state_json(const Json &doc) {
    if (!doc.is_object()) {
        throw InputError("state file: expected a JSON object with field 'amplitudes'");
    }
    if (!doc.contains("amplitudes")) {
        throw InputError("state file: missing field 'amplitudes'");
    }
    const Json &amps = doc["amplitudes"];
    if (!amps.is_array() || amps.size() != 4) {
        std::string got = amps.is_array() ? std::to_string(amps.size()) : std::string(amps.type_name());
        throw InputError("field 'amplitudes': expected 4 amplitudes, got " + got);
    }
    bool normalize = false;
    if (doc.contains("normalize")) {
        if (!doc["normalize"].is_boolean()) {
            throw InputError("field 'normalize': expected a boolean");
        }
        normalize = doc["normalize"].get<bool>();
    }
    Ket4 v;
    for (size_t k = 0; k < 4; k++) {
        const Json &pair = amps[k];
        std::string where = "field 'amplitudes[" + std::to_string(k) + "]'";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw InputError(where + ": expected a [re, im] pair of numbers");
        }
        double re = pair[0].get<double>();
        double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw InputError(where + ": amplitudes must be finite");
        }
        v[k] = Complex{re, im};
    }
    double n = norm(v);
    if (n == 0) {
        throw InputError("field 'amplitudes': zero vector");
    }
    if (normalize) {
        return StateVec::normalized(v);
    }
    if (std::abs(n - 1) > kTolerance) {
        throw InputError("field 'amplitudes': norm is " + fmt("%.12g", n) +
                         ", expected 1 (set \"normalize\": true to rescale)");
    }
    return StateVec(v);
}

StateVec parse_state_text(std::string_view text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw InputError("state file: malformed JSON");
    }
    return parse_state_json(doc);
}

Json report_to_json(const VerificationReport &report) {
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kVersion;
    doc["seed"] = report.seed;
    doc["tolerances"] = {
        {"exact", kExactTolerance},
        {"sampled", kSampledTolerance},
        {"rank_threshold", kRankThreshold},
    };
    doc["summary"] = {
        {"total", report.checks.size()},
        {"passed", report.passed_count()},
        {"failed", report.failed_count()},
    };
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        Json bounds = Json::array();
        for (const auto &b : c.bounds) {
            bounds.push_back({{"name", b.name}, {"value", b.value}, {"threshold", b.threshold}, {"holds", b.holds()}});
        }
        Json entry;
        entry["check_id"] = c.check_id;
        entry["identities"] = c.identities;
        entry["tolerance"] = c.tolerance;
        // NaN has no JSON encoding and becomes null.
        entry["max_deviation"] = std::isnan(c.max_deviation) ? Json(nullptr) : Json(c.max_deviation);
        entry["bounds"] = bounds;
        entry["passed"] = c.passed;
        entry["details"] = c.details;
        checks.push_back(entry);
    }
    doc["checks"] = checks;
    return doc;
}

std::string report_to_text(const VerificationReport &report) {
    std::ostringstream out;
    out << kToolName << " " << kVersion << " verification, seed " << report.seed << "\n";
    for (const auto &c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.check_id << "  max_deviation=" << fmt("%.3e", c.max_deviation)
            << " (tol " << fmt("%.0e", c.tolerance) << ")\n";
        for (const auto &b : c.bounds) {
            out << "     bound " << b.name << " = " << fmt("%.6g", b.value) << " > " << fmt("%.6g", b.threshold)
                << (b.holds() ? "" : "  VIOLATED") << "\n";
        }
        out << "     " << c.details << "\n";
    }
    out << report.passed_count() << "/" << report.checks.size() << " checks passed\n";
    return out.str();
}

Json schmidt_to_json(const LabelClassification &entry) {
    const auto &s = entry.schmidt;
    Json out;
    out["label"] = label_name(entry.label);
    out["separability"] = separability_name(entry.separability);
    out["rank"] = s.rank;
    out["coefficients"] = {s.coefficients[0], s.coefficients[1]};
    out["near_degenerate"] = s.near_degenerate;
    out["left_basis"] = {ket2_to_json(s.left_basis[0]), ket2_to_json(s.left_basis[1])};
    out["right_basis"] = {ket2_to_json(s.right_basis[0]), ket2_to_json(s.right_basis[1])};
    return out;
}

Json classification_to_json(const StateVec &state, const TpsClassification &classification) {
    Json out;
    out["state"] = ket_to_json(state.ket());
    Json labels = Json::array();
    for (const auto &entry : classification.entries) {
        labels.push_back(schmidt_to_json(entry));
    }
    out["labels"] = labels;
    return out;
}

std::string schmidt_to_text(const LabelClassification &entry) {
    const auto &s = entry.schmidt;
    std::ostringstream out;
    out << label_name(entry.label) << "  " << separability_name(entry.separability) << "  rank " << s.rank
        << "  coefficients (" << fmt("%.12f", s.coefficients[0]) << ", " << fmt("%.12f", s.coefficients[1]) << ")";
    if (s.near_degenerate) {
        out << "  near-degenerate";
    }
    out << "\n";
    return out.str();
}

std::string classification_to_text(const StateVec &state, const TpsClassification &classification) {
    std::ostringstream out;
    out << "state " << str(state.ket()) << "\n";
    for (const auto &entry : classification.entries) {
        out << schmidt_to_text(entry);
    }
    return out.str();
}

Json simulation_to_json(const ExperimentConfig &cfg, const CountsTable &counts) {
    auto probs = analytic_probs(cfg.state, cfg.label);
    auto stats = correlation_stats(counts);
    Json out;
    out["label"] = label_name(cfg.label);
    out["shots"] = cfg.shots;
    out["seed"] = cfg.seed;
    out["state"] = ket_to_json(cfg.state.ket());
    Json joint = Json::array();
    for (int k = 0; k < 4; k++) {
        joint.push_back({
            {"outcome", kOutcomes[k]},
            {"count", counts.joint[k]},
            {"frequency", counts.joint_frequency(k / 2, k % 2)},
            {"probability", probs[k]},
        });
    }
    out["joint"] = joint;
    out["left_marginal"] = {counts.left_marginal[0], counts.left_marginal[1]};
    out["right_marginal"] = {counts.right_marginal[0], counts.right_marginal[1]};
    out["stats"] = {
        {"iff_freq", stats.iff_freq},
        {"xor_freq", stats.xor_freq},
        {"left_bias", stats.left_bias},
        {"right_bias", stats.right_bias},
    };
    return out;
}

std::string simulation_to_text(const ExperimentConfig &cfg, const CountsTable &counts) {
    auto probs = analytic_probs(cfg.state, cfg.label);
    auto stats = correlation_stats(counts);
    std::ostringstream out;
    out << "label " << label_name(cfg.label) << "  shots " << cfg.shots << "  seed " << cfg.seed << "\n";
    out << "outcome       count   frequency  probability\n";
    for (int k = 0; k < 4; k++) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-7s %11llu  %10.6f   %10.6f\n", kOutcomes[k],
                      static_cast<unsigned long long>(counts.joint[k]), counts.joint_frequency(k / 2, k % 2),
                      probs[k]);
        out << line;
    }
    out << "left marginal  (" << counts.left_marginal[0] << ", " << counts.left_marginal[1] << ")\n";
    out << "right marginal (" << counts.right_marginal[0] << ", " << counts.right_marginal[1] << ")\n";
    out << "iff " << fmt("%.6f", stats.iff_freq) << "  xor " << fmt("%.6f", stats.xor_freq) << "  left_bias "
        << fmt("%.6f", stats.left_bias) << "  right_bias " << fmt("%.6f", stats.right_bias) << "\n";
    return out.str();
}

Json projector_table_to_json(TpsLabel label) {
    Json rows = Json::array();
    for (auto side : {Side::Left, Side::Right}) {
        for (int alpha = 0; alpha < 2; alpha++) {
            auto support = projector_support(label, side, alpha);
            Json colors = Json::array();
            for (int k : support) {
                colors.push_back(std::string(1, color_letter(static_cast<ColorChannel>(k))));
            }
            rows.push_back({
                {"side", side_name(side)},
                {"bit", alpha},
                {"projector", projector_name(label, side, alpha)},
                {"colors", colors},
                {"proposition", subsystem_projector(label, side, alpha).text},
            });
        }
    }
    return Json{{"label", label_name(label)}, {"rows", rows}};
}

std::string projector_table_to_text(TpsLabel label) {
    std::ostringstream out;
    for (auto side : {Side::Left, Side::Right}) {
        for (int alpha = 0; alpha < 2; alpha++) {
            std::string lhs = projector_name(label, side, alpha) + " = " +
                              support_text(projector_support(label, side, alpha));
            out << lhs << "    " << subsystem_projector(label, side, alpha).text << "\n";
        }
    }
    return out.str();
}

}  // namespace reltps
