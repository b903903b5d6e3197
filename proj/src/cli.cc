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

#include "reltps/cli.h"

#include <algorithm>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "reltps/io.h"
#include "reltps/states.h"

namespace reltps {

namespace {

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

const CLI::Validator kLabelValidator(
    [](std::string &text) -> std::string {
        if (parse_label(text)) {
            return {};
        }
        return "invalid label '" + text + "' (must be one of 123, 132, 213, 231, 312, 321)";
    },
    "LABEL");

const CLI::Validator kStateValidator(
    [](std::string &text) -> std::string {
        if (builtin_state(text)) {
            return {};
        }
        return "unknown state '" + text + "' (singlet, psi-, psi+, phi+, phi-, c, m, y, g, uniform)";
    },
    "STATE");

struct StateArgs {
    std::string name;
    std::string file;
};

void add_state_options(CLI::App *cmd, StateArgs &args) {
    auto *name = cmd->add_option("--state", args.name, "Built-in state")->check(kStateValidator);
    auto *file = cmd->add_option("--state-file", args.file, "JSON file with 4 [re, im] amplitudes");
    name->excludes(file);
    file->excludes(name);
}

StateVec load_state(const StateArgs &args) {
    if (!args.name.empty()) {
        return *builtin_state(args.name);
    }
    if (args.file.empty()) {
        throw InputError("one of --state or --state-file is required");
    }
    std::ifstream in(args.file);
    if (!in) {
        throw InputError("cannot read state file '" + args.file + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_text(buf.str());
}

/// Writes all of `text` to `path` or leaves no file behind.
bool write_file(const std::string &path, const std::string &text, std::ostream &err) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            err << "error: cannot write '" << path << "'\n";
            return false;
        }
        f << text;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            err << "error: write to '" << path << "' failed\n";
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

std::string dump(const Json &doc) {
    return doc.dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Relative tensor product structures on a four-dimensional Hilbert space", "reltps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    uint64_t verify_seed = 0;
    std::string verify_output;
    std::string verify_format = "json";
    auto *verify = app.add_subcommand("verify", "Run every identity check and write a report");
    verify->add_option("--seed", verify_seed, "Seed for the sampled checks")->capture_default_str();
    verify->add_option("--output", verify_output, "Report path (default: standard output)");
    verify->add_option("--format", verify_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    StateArgs classify_state;
    std::string classify_label;
    std::string classify_format = "text";
    auto *classify = app.add_subcommand("classify", "Schmidt data of a state under each tensor product");
    add_state_options(classify, classify_state);
    classify->add_option("--label", classify_label, "Only this label")->check(kLabelValidator);
    classify->add_option("--format", classify_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    StateArgs sim_state;
    std::string sim_label;
    uint64_t sim_shots = 100000;
    uint64_t sim_seed = 0;
    std::string sim_format = "text";
    auto *simulate = app.add_subcommand("simulate", "Sample detector outcomes for a wiring");
    add_state_options(simulate, sim_state);
    simulate->add_option("--label", sim_label, "Detector wiring")->required()->check(kLabelValidator);
    simulate->add_option("--shots", sim_shots, "Number of shots")
        ->check(CLI::Range(uint64_t{1}, std::numeric_limits<uint64_t>::max()))
        ->capture_default_str();
    simulate->add_option("--seed", sim_seed, "Sampler seed")->capture_default_str();
    simulate->add_option("--format", sim_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string table_label;
    std::string table_format = "text";
    auto *table = app.add_subcommand("table", "Subsystem projectors as color sums");
    table->add_option("--label", table_label, "Only this label")->check(kLabelValidator);
    table->add_option("--format", table_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            VerificationReport report = run_all(verify_seed);
            std::string text;
            if (verify_format == "json") {
                Json doc = report_to_json(report);
                Json stamped;
                for (auto it = doc.begin(); it != doc.end(); ++it) {
                    stamped[it.key()] = it.value();
                    if (it.key() == "seed") {
                        stamped["timestamp"] = utc_timestamp();
                    }
                }
                text = dump(stamped);
            } else {
                text = "generated " + utc_timestamp() + "\n" + report_to_text(report);
            }
            if (verify_output.empty()) {
                out << text;
            } else if (!write_file(verify_output, text, err)) {
                return kExitUsage;
            }
            if (!report.all_passed()) {
                err << report.failed_count() << " check(s) failed\n";
                return kExitVerificationFailed;
            }
            return kExitOk;
        }

        if (classify->parsed()) {
            StateVec state = load_state(classify_state);
            TpsClassification c = classify_all(state);
            if (classify_label.empty()) {
                out << (classify_format == "json" ? dump(classification_to_json(state, c))
                                                  : classification_to_text(state, c));
            } else {
                const auto &entry = c.at(*parse_label(classify_label));
                if (classify_format == "json") {
                    Json doc;
                    doc["state"] = ket_to_json(state.ket());
                    doc["labels"] = Json::array({schmidt_to_json(entry)});
                    out << dump(doc);
                } else {
                    out << "state " << str(state.ket()) << "\n" << schmidt_to_text(entry);
                }
            }
            return kExitOk;
        }

        if (simulate->parsed()) {
            ExperimentConfig cfg{load_state(sim_state), *parse_label(sim_label), sim_shots, sim_seed};
            CountsTable counts = sample_counts(cfg);
            out << (sim_format == "json" ? dump(simulation_to_json(cfg, counts)) : simulation_to_text(cfg, counts));
            return kExitOk;
        }

        if (table->parsed()) {
            std::vector<TpsLabel> labels;
            if (table_label.empty()) {
                labels.assign(kAllLabels.begin(), kAllLabels.end());
            } else {
                labels.push_back(*parse_label(table_label));
            }
            if (table_format == "json") {
                Json doc = Json::array();
                for (auto label : labels) {
                    doc.push_back(projector_table_to_json(label));
                }
                out << dump(doc);
            } else {
                for (size_t k = 0; k < labels.size(); k++) {
                    if (k > 0) {
                        out << "\n";
                    }
                    out << "label " << label_name(labels[k]) << "\n" << projector_table_to_text(labels[k]);
                }
            }
            return kExitOk;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace reltps
