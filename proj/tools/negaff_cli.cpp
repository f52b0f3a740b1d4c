// Copyright 2026 The negaff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver. Talks to the engine only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negaff/negaff.h"

namespace {

constexpr int kUsage = 1;

int usage_error(const std::string& msg) {
    std::cerr << "negaff: " << msg << "\n";
    return kUsage;
}

struct Config {
    negaff_config* p = nullptr;
    ~Config() { negaff_config_destroy(p); }
};

struct Result {
    negaff_result* p = nullptr;
    ~Result() { negaff_result_destroy(p); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of a parafermion realization of the negative-level affine sl2 algebra"};
    std::vector<int> levels = {1, 2, 3, 4};
    int truncation = 6, fock_degree = 4, sectors = 2, jobs = 0;
    std::vector<std::string> suites;
    std::vector<std::string> errata;
    std::string format = "json", out, golden;

    std::vector<std::string> known;
    for (size_t i = 0; i < negaff_suite_count(); ++i) known.emplace_back(negaff_suite_name(i));

    app.add_option("--levels", levels, "Levels k (comma separated)")->delimiter(',')->check(CLI::PositiveNumber);
    app.add_option("--truncation", truncation, "Series truncation N")->capture_default_str();
    app.add_option("--fock-degree", fock_degree, "Fock degree cap D")->capture_default_str();
    app.add_option("--sectors", sectors, "Lattice sector range W")->capture_default_str();
    app.add_option("--suites", suites, "Suites to run (comma separated, default all)")
        ->delimiter(',')
        ->check(CLI::IsMember(known));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--out", out, "Output file (default standard output)");
    app.add_option("--golden", golden, "Write golden files under this directory");
    app.add_option("--erratum-literal", errata, "Use a printed form instead of the corrected one")
        ->delimiter(',')
        ->check(CLI::IsMember({"hz-y", "e-exchange"}));
    app.add_option("--jobs", jobs, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Config cfg;
    if (negaff_config_create(&cfg.p) != NEGAFF_OK) return usage_error(negaff_last_error());
    negaff_config_set_levels(cfg.p, levels.data(), levels.size());
    negaff_config_set_truncation(cfg.p, truncation);
    negaff_config_set_fock_degree(cfg.p, fock_degree);
    negaff_config_set_sectors(cfg.p, sectors);
    negaff_config_set_jobs(cfg.p, jobs);
    if (app.count("--suites")) {
        std::vector<const char*> names;
        for (const auto& s : suites) names.push_back(s.c_str());
        negaff_config_set_suites(cfg.p, names.data(), names.size());
    }
    for (const auto& e : errata)
        if (negaff_config_set_literal(cfg.p, e.c_str(), 1) != NEGAFF_OK) return usage_error(negaff_last_error());
    if (negaff_config_validate(cfg.p) != NEGAFF_OK) return usage_error(negaff_last_error());

    Result res;
    if (negaff_run(cfg.p, &res.p) != NEGAFF_OK) {
        std::cerr << "negaff: " << negaff_last_error() << "\n";
        return 4;
    }
    const char* doc = format == "json" ? negaff_result_json(res.p) : negaff_result_text(res.p);
    if (out.empty()) {
        std::fputs(doc, stdout);
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f || !(f << doc)) {
            std::cerr << "negaff: cannot write " << out << "\n";
            return 4;
        }
    }
    if (!golden.empty() && negaff_result_write_golden(res.p, golden.c_str()) != NEGAFF_OK) {
        std::cerr << "negaff: " << negaff_last_error() << "\n";
        return 4;
    }
    return negaff_result_exit_code(res.p);
}
