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

// C API and command-line driver. Links only the shared library.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "negaff/negaff.h"

namespace {

int cli(const std::string& args, const std::string& out = "/dev/null") {
    std::string cmd = std::string(NEGAFF_CLI) + " " + args + " > " + out + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("null handles and bad arguments") {
    CHECK(negaff_config_create(nullptr) == NEGAFF_ERR_NULL);
    CHECK(negaff_config_set_truncation(nullptr, 3) == NEGAFF_ERR_NULL);
    CHECK(std::string(negaff_last_error()).size() > 0);
    negaff_result* res = nullptr;
    CHECK(negaff_run(nullptr, &res) == NEGAFF_ERR_NULL);
    CHECK(negaff_result_count(nullptr) == 0);
    CHECK(negaff_result_json(nullptr) == nullptr);
    negaff_config_destroy(nullptr);
    negaff_result_destroy(nullptr);

    negaff_config* cfg = nullptr;
    REQUIRE(negaff_config_create(&cfg) == NEGAFF_OK);
    CHECK(negaff_config_set_literal(cfg, "bogus", 1) == NEGAFF_ERR_INVALID_ARGUMENT);
    CHECK(negaff_config_set_truncation(cfg, 0) == NEGAFF_OK);
    CHECK(negaff_config_validate(cfg) == NEGAFF_ERR_INVALID_CONFIG);
    CHECK(negaff_run(cfg, &res) == NEGAFF_ERR_INVALID_CONFIG);
    CHECK(res == nullptr);
    negaff_config_destroy(cfg);
}

TEST_CASE("run through the C API") {
    CHECK(negaff_suite_count() == 6);
    CHECK(std::string(negaff_suite_name(0)) == "heisenberg");
    CHECK(negaff_suite_name(6) == nullptr);

    negaff_config* cfg = nullptr;
    REQUIRE(negaff_config_create(&cfg) == NEGAFF_OK);
    int levels[] = {1, 2};
    const char* suites[] = {"delta", "vacuum"};
    CHECK(negaff_config_set_levels(cfg, levels, 2) == NEGAFF_OK);
    CHECK(negaff_config_set_suites(cfg, suites, 2) == NEGAFF_OK);
    negaff_result* res = nullptr;
    REQUIRE(negaff_run(cfg, &res) == NEGAFF_OK);
    CHECK(negaff_result_exit_code(res) == 0);
    size_t n = negaff_result_count(res);
    CHECK(n > 0);
    const char* id = nullptr;
    int k = 0, sector = -1;
    negaff_status st = NEGAFF_FAIL;
    CHECK(negaff_result_entry(res, 0, &id, &k, &sector, &st) == NEGAFF_OK);
    CHECK(std::string(id).rfind("delta.", 0) == 0);
    CHECK(k == 1);
    CHECK(st == NEGAFF_PASS);
    CHECK(negaff_result_entry(res, n, &id, &k, &sector, &st) == NEGAFF_ERR_RANGE);
    std::string json = negaff_result_json(res);
    CHECK(json.find("\"vacuum.decomposition\"") != std::string::npos);
    CHECK(std::string(negaff_result_text(res)).find("pass") != std::string::npos);
    negaff_result_destroy(res);
    negaff_config_destroy(cfg);
}

TEST_CASE("command line exit codes") {
    CHECK(cli("--levels 2 --suites realization") == 0);
    CHECK(cli("--levels 2 --truncation 1") == 3);
    CHECK(cli("--levels 1 --suites realization --erratum-literal hz-y") == 2);
    CHECK(cli("--levels 1 --suites heisenberg --erratum-literal e-exchange") == 2);
    CHECK(cli("--suites nope") == 1);
    CHECK(cli("--levels 0") == 1);
    CHECK(cli("--truncation 0") == 1);
    CHECK(cli("--format xml") == 1);
    CHECK(cli("--erratum-literal typo") == 1);
    CHECK(cli("--bogus") == 1);
}

TEST_CASE("command line output is deterministic") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path();
    auto a = (dir / "negaff_cli_a.json").string(), b = (dir / "negaff_cli_b.json").string();
    CHECK(cli("--levels 1,3 --suites delta,parafermion,vacuum --out " + a) == 0);
    CHECK(cli("--levels 3,1 --suites vacuum,delta,parafermion", b) == 0);
    auto x = slurp(a);
    CHECK_FALSE(x.empty());
    CHECK(x == slurp(b));
    fs::remove(a);
    fs::remove(b);
}
