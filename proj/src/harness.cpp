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

#include "negaff/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "negaff/suites.hpp"

namespace negaff {

using nlohmann::json;

std::optional<std::string> validate(const RunConfig& cfg) {
    if (cfg.levels.empty()) return "at least one level is required";
    for (int k : cfg.levels)
        if (k < 1) return "levels must be positive integers";
    if (cfg.truncation < 1) return "truncation must be >= 1";
    if (cfg.fock_degree < 1) return "fock degree must be >= 1";
    if (cfg.sectors < 0) return "sector range must be >= 0";
    if (cfg.suites.empty()) return "at least one suite is required";
    for (const auto& s : cfg.suites)
        if (!is_suite(s)) return "unknown suite: " + s;
    if (cfg.format != "json" && cfg.format != "text") return "format must be json or text";
    if (cfg.jobs < 0) return "jobs must be >= 0";
    return std::nullopt;
}

int exit_code(const std::vector<SuiteReport>& reports) {
    bool fail = false, inconclusive = false;
    for (const auto& r : reports) {
        fail |= r.report.status == Status::Fail;
        inconclusive |= r.report.status == Status::Inconclusive;
    }
    return fail ? 2 : inconclusive ? 3 : 0;
}

RunResult run(const RunConfig& cfg) {
    if (auto err = validate(cfg)) throw std::invalid_argument(*err);
    SuiteOptions o;
    o.N = cfg.truncation;
    o.D = cfg.fock_degree;
    o.W = cfg.sectors;
    o.literal_hy = cfg.literal_hy;
    o.literal_exchange = cfg.literal_exchange;

    std::vector<std::string> suites = cfg.suites;
    std::sort(suites.begin(), suites.end());
    suites.erase(std::unique(suites.begin(), suites.end()), suites.end());
    std::vector<int> levels = cfg.levels;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    struct Task {
        std::string suite;
        int k;
    };
    std::vector<Task> tasks;
    for (const auto& s : suites)
        for (int k : levels) tasks.push_back({s, k});

    std::vector<std::vector<VerifyReport>> results(tasks.size());
    unsigned jobs = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs) : std::max(1u, std::thread::hardware_concurrency());
    std::size_t next = 0;
    std::mutex m;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(m);
                if (next == tasks.size()) return;
                i = next++;
            }
            results[i] = run_suite(tasks[i].suite, tasks[i].k, o);
        }
    };
    std::vector<std::future<void>> pool;
    for (unsigned j = 0; j < std::min<std::size_t>(jobs, tasks.size()); ++j)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    RunResult res;
    for (std::size_t i = 0; i < tasks.size(); ++i)
        for (auto& r : results[i]) {
            r.sector_range = cfg.sectors;
            res.reports.push_back({tasks[i].suite, std::move(r)});
        }
    std::stable_sort(res.reports.begin(), res.reports.end(), [](const SuiteReport& a, const SuiteReport& b) {
        return std::tie(a.report.id, a.report.k, a.report.sector) < std::tie(b.report.id, b.report.k, b.report.sector);
    });
    res.exit_code = exit_code(res.reports);
    return res;
}

namespace {

json bound(const std::optional<Exponent>& e) { return e ? json(e->str()) : json(nullptr); }

json report_json(const SuiteReport& sr) {
    const auto& r = sr.report;
    json w = {{"checked", r.window.checked},
              {"ez", {bound(r.window.ez_lo), bound(r.window.ez_hi)}},
              {"ew", {bound(r.window.ew_lo), bound(r.window.ew_hi)}},
              {"truncation", r.truncation},
              {"fock_degree", r.fock_degree},
              {"sector_range", r.sector_range}};
    json j = {{"id", r.id}, {"k", r.k}, {"sector", r.sector}, {"status", status_name(r.status)}, {"window", w}};
    if (r.mismatch) {
        j["mismatch"] = {{"where", r.mismatch->where},
                         {"ez", r.mismatch->ez.str()},
                         {"ew", r.mismatch->ew.str()},
                         {"lhs", r.mismatch->lhs.fraction()},
                         {"rhs", r.mismatch->rhs.fraction()}};
    }
    return j;
}

json config_json(const RunConfig& cfg) {
    std::vector<int> levels = cfg.levels;
    std::sort(levels.begin(), levels.end());
    std::vector<std::string> suites = cfg.suites;
    std::sort(suites.begin(), suites.end());
    std::vector<std::string> errata;
    if (cfg.literal_exchange) errata.push_back("e-exchange");
    if (cfg.literal_hy) errata.push_back("hz-y");
    return {{"levels", levels},         {"truncation", cfg.truncation}, {"fock_degree", cfg.fock_degree},
            {"sectors", cfg.sectors},   {"suites", suites},             {"erratum_literal", errata}};
}

}  // namespace

std::string emit_json(const RunConfig& cfg, const std::vector<SuiteReport>& reports) {
    json doc;
    doc["config"] = config_json(cfg);
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_json(r));
    return doc.dump(2) + "\n";
}

std::string emit_text(const std::vector<SuiteReport>& reports) {
    std::size_t wid = 8;
    for (const auto& r : reports) wid = std::max(wid, r.report.id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(wid)) << "identity" << "  " << std::setw(3) << "k" << "  "
       << std::setw(6) << "sector" << "  " << std::setw(12) << "status" << "  " << std::setw(8) << "checked"
       << "  mismatch\n";
    for (const auto& sr : reports) {
        const auto& r = sr.report;
        os << std::setw(static_cast<int>(wid)) << r.id << "  " << std::setw(3) << r.k << "  " << std::setw(6)
           << r.sector << "  " << std::setw(12) << status_name(r.status) << "  " << std::setw(8) << r.window.checked;
        if (r.mismatch)
            os << "  " << r.mismatch->where << " at (" << r.mismatch->ez.str() << ", " << r.mismatch->ew.str()
               << "): " << r.mismatch->lhs.fraction() << " vs " << r.mismatch->rhs.fraction();
        os << "\n";
    }
    std::map<Status, int> count;
    for (const auto& r : reports) ++count[r.report.status];
    os << "\n" << count[Status::Pass] << " pass, " << count[Status::Fail] << " fail, " << count[Status::Inconclusive]
       << " inconclusive\n";
    return os.str();
}

int write_golden(const std::string& dir, const std::vector<SuiteReport>& reports) {
    namespace fs = std::filesystem;
    std::map<std::tuple<std::string, int, std::string>, json> files;
    for (const auto& r : reports) {
        auto& j = files[{r.suite, r.report.k, r.report.id}];
        if (j.is_null()) j = {{"id", r.report.id}, {"k", r.report.k}, {"suite", r.suite}, {"reports", json::array()}};
        j["reports"].push_back(report_json(r));
    }
    for (const auto& [key, j] : files) {
        const auto& [suite, k, id] = key;
        fs::path p = fs::path(dir) / suite / std::to_string(k);
        fs::create_directories(p);
        std::ofstream f(p / (id + ".json"));
        if (!f) throw std::runtime_error("cannot write " + (p / (id + ".json")).string());
        f << j.dump(2) << "\n";
    }
    return static_cast<int>(files.size());
}

}  // namespace negaff
