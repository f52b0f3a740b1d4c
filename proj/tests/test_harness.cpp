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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "negaff/harness.hpp"

using namespace negaff;

namespace {

SuiteReport fake(const std::string& id, Status s) {
    SuiteReport r;
    r.suite = "delta";
    r.report.id = id;
    r.report.k = 1;
    r.report.status = s;
    return r;
}

}  // namespace

TEST_CASE("configuration validation") {
    RunConfig c;
    CHECK_FALSE(validate(c));
    auto bad = [](auto edit) {
        RunConfig c;
        edit(c);
        return validate(c).has_value();
    };
    CHECK(bad([](RunConfig& c) { c.truncation = 0; }));
    CHECK(bad([](RunConfig& c) { c.fock_degree = 0; }));
    CHECK(bad([](RunConfig& c) { c.sectors = -1; }));
    CHECK(bad([](RunConfig& c) { c.suites.clear(); }));
    CHECK(bad([](RunConfig& c) { c.suites = {"nope"}; }));
    CHECK(bad([](RunConfig& c) { c.levels = {0}; }));
    CHECK(bad([](RunConfig& c) { c.levels.clear(); }));
    CHECK(bad([](RunConfig& c) { c.format = "xml"; }));
    CHECK_THROWS_AS(run([] {
                        RunConfig c;
                        c.suites.clear();
                        return c;
                    }()),
                    std::invalid_argument);
}

TEST_CASE("exit codes: failure beats inconclusive") {
    CHECK(exit_code({}) == 0);
    CHECK(exit_code({fake("a", Status::Pass)}) == 0);
    CHECK(exit_code({fake("a", Status::Pass), fake("b", Status::Inconclusive)}) == 3);
    CHECK(exit_code({fake("a", Status::Inconclusive), fake("b", Status::Fail)}) == 2);
}

TEST_CASE("json report shape and ordering") {
    RunConfig c;
    c.levels = {2, 1};
    c.suites = {"parafermion", "delta"};
    auto res = run(c);
    CHECK(res.exit_code == 0);
    auto text = emit_json(c, res.reports);
    CHECK(text == emit_json(c, run(c).reports));
    auto doc = nlohmann::json::parse(text);
    CHECK(doc["config"]["levels"] == nlohmann::json({1, 2}));
    auto& reps = doc["reports"];
    REQUIRE(reps.size() == res.reports.size());
    for (std::size_t i = 1; i < reps.size(); ++i) {
        auto key = [&](std::size_t j) {
            return std::make_tuple(reps[j]["id"].get<std::string>(), reps[j]["k"].get<int>(), reps[j]["sector"].get<int>());
        };
        CHECK(key(i - 1) < key(i));
    }
    for (const auto& r : reps) {
        CHECK(r["status"] == "pass");
        CHECK(r["window"]["checked"].get<long>() > 0);
        CHECK(r["window"]["truncation"] == 6);
        CHECK_FALSE(r.contains("mismatch"));
    }
    // keys in sorted order
    auto first = text.find("\"config\"");
    CHECK(first < text.find("\"reports\""));
    CHECK(text.find("\"id\"") < text.find("\"k\""));
}

TEST_CASE("forced failure records exact rationals") {
    RunConfig c;
    c.levels = {1};
    c.suites = {"realization"};
    c.literal_hy = true;
    auto res = run(c);
    CHECK(res.exit_code == 2);
    auto doc = nlohmann::json::parse(emit_json(c, res.reports));
    int fails = 0;
    for (const auto& r : doc["reports"]) {
        if (r["status"] != "fail") continue;
        ++fails;
        CHECK(r["id"] == "currents.hy");
        auto lhs = r["mismatch"]["lhs"].get<std::string>();
        auto rhs = r["mismatch"]["rhs"].get<std::string>();
        CHECK(lhs.find('/') != std::string::npos);
        CHECK(rhs.find('/') != std::string::npos);
        CHECK(lhs != rhs);
    }
    CHECK(fails == 5);
    auto table = emit_text(res.reports);
    CHECK(table.find("currents.hy") != std::string::npos);
    CHECK(table.find(" fail ") != std::string::npos);
}

TEST_CASE("too small a truncation is inconclusive, never failing") {
    RunConfig c;
    c.levels = {2};
    c.truncation = 1;
    auto res = run(c);
    CHECK(res.exit_code == 3);
    for (const auto& r : res.reports) CHECK(r.report.status != Status::Fail);
}

TEST_CASE("golden files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "negaff_golden_test";
    fs::remove_all(dir);
    RunConfig c;
    c.levels = {3};
    c.suites = {"delta"};
    auto res = run(c);
    int n = write_golden(dir.string(), res.reports);
    CHECK(n == static_cast<int>(res.reports.size()));
    fs::path f = dir / "delta" / "3" / "delta.symmetry.json";
    REQUIRE(fs::exists(f));
    std::ifstream in(f);
    auto j = nlohmann::json::parse(in);
    CHECK(j["suite"] == "delta");
    CHECK(j["reports"][0]["status"] == "pass");
    fs::remove_all(dir);
}
