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

#include "negaff/negaff.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "negaff/harness.hpp"
#include "negaff/suites.hpp"

struct negaff_config {
    negaff::RunConfig cfg;
};

struct negaff_result {
    negaff::RunConfig cfg;
    negaff::RunResult res;
    std::string json, text;
};

namespace {

thread_local std::string last_error;

negaff_error fail(negaff_error code, std::string msg) {
    last_error = std::move(msg);
    return code;
}

negaff_error ok() {
    last_error.clear();
    return NEGAFF_OK;
}

template <class F>
negaff_error guarded(F&& f) {
    try {
        return f();
    } catch (const std::bad_alloc&) {
        return fail(NEGAFF_ERR_INTERNAL, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(NEGAFF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(NEGAFF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(NEGAFF_ERR_INTERNAL, "unknown error");
    }
}

}  // namespace

extern "C" {

const char* negaff_last_error(void) { return last_error.c_str(); }

size_t negaff_suite_count(void) { return negaff::suite_names().size(); }

const char* negaff_suite_name(size_t i) {
    const auto& names = negaff::suite_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

negaff_error negaff_config_create(negaff_config** out) {
    if (!out) return fail(NEGAFF_ERR_NULL, "null output pointer");
    return guarded([&] {
        *out = new negaff_config{};
        return ok();
    });
}

void negaff_config_destroy(negaff_config* cfg) { delete cfg; }

negaff_error negaff_config_set_levels(negaff_config* cfg, const int* levels, size_t n) {
    if (!cfg || (n && !levels)) return fail(NEGAFF_ERR_NULL, "null argument");
    return guarded([&] {
        cfg->cfg.levels.assign(levels, levels + n);
        return ok();
    });
}

negaff_error negaff_config_set_truncation(negaff_config* cfg, int n) {
    if (!cfg) return fail(NEGAFF_ERR_NULL, "null config");
    cfg->cfg.truncation = n;
    return ok();
}

negaff_error negaff_config_set_fock_degree(negaff_config* cfg, int d) {
    if (!cfg) return fail(NEGAFF_ERR_NULL, "null config");
    cfg->cfg.fock_degree = d;
    return ok();
}

negaff_error negaff_config_set_sectors(negaff_config* cfg, int w) {
    if (!cfg) return fail(NEGAFF_ERR_NULL, "null config");
    cfg->cfg.sectors = w;
    return ok();
}

negaff_error negaff_config_set_suites(negaff_config* cfg, const char* const* names, size_t n) {
    if (!cfg || (n && !names)) return fail(NEGAFF_ERR_NULL, "null argument");
    return guarded([&] {
        std::vector<std::string> v;
        for (size_t i = 0; i < n; ++i) {
            if (!names[i]) return fail(NEGAFF_ERR_NULL, "null suite name");
            v.emplace_back(names[i]);
        }
        cfg->cfg.suites = std::move(v);
        return ok();
    });
}

negaff_error negaff_config_set_literal(negaff_config* cfg, const char* name, int on) {
    if (!cfg || !name) return fail(NEGAFF_ERR_NULL, "null argument");
    std::string s = name;
    if (s == "hz-y")
        cfg->cfg.literal_hy = on != 0;
    else if (s == "e-exchange")
        cfg->cfg.literal_exchange = on != 0;
    else
        return fail(NEGAFF_ERR_INVALID_ARGUMENT, "unknown erratum: " + s);
    return ok();
}

negaff_error negaff_config_set_jobs(negaff_config* cfg, int jobs) {
    if (!cfg) return fail(NEGAFF_ERR_NULL, "null config");
    cfg->cfg.jobs = jobs;
    return ok();
}

negaff_error negaff_config_validate(const negaff_config* cfg) {
    if (!cfg) return fail(NEGAFF_ERR_NULL, "null config");
    if (auto err = negaff::validate(cfg->cfg)) return fail(NEGAFF_ERR_INVALID_CONFIG, *err);
    return ok();
}

negaff_error negaff_run(const negaff_config* cfg, negaff_result** out) {
    if (!cfg || !out) return fail(NEGAFF_ERR_NULL, "null argument");
    *out = nullptr;
    if (auto err = negaff::validate(cfg->cfg)) return fail(NEGAFF_ERR_INVALID_CONFIG, *err);
    return guarded([&] {
        auto* r = new negaff_result{cfg->cfg, negaff::run(cfg->cfg), {}, {}};
        *out = r;
        return ok();
    });
}

void negaff_result_destroy(negaff_result* res) { delete res; }

int negaff_result_exit_code(const negaff_result* res) { return res ? res->res.exit_code : -1; }

size_t negaff_result_count(const negaff_result* res) { return res ? res->res.reports.size() : 0; }

negaff_error negaff_result_entry(const negaff_result* res, size_t i, const char** id, int* k, int* sector,
                                 negaff_status* status) {
    if (!res) return fail(NEGAFF_ERR_NULL, "null result");
    if (i >= res->res.reports.size()) return fail(NEGAFF_ERR_RANGE, "report index out of range");
    const auto& r = res->res.reports[i].report;
    if (id) *id = r.id.c_str();
    if (k) *k = r.k;
    if (sector) *sector = r.sector;
    if (status)
        *status = r.status == negaff::Status::Pass ? NEGAFF_PASS
                  : r.status == negaff::Status::Fail ? NEGAFF_FAIL
                                                     : NEGAFF_INCONCLUSIVE;
    return ok();
}

const char* negaff_result_json(negaff_result* res) {
    if (!res) return nullptr;
    if (res->json.empty()) res->json = negaff::emit_json(res->cfg, res->res.reports);
    return res->json.c_str();
}

const char* negaff_result_text(negaff_result* res) {
    if (!res) return nullptr;
    if (res->text.empty()) res->text = negaff::emit_text(res->res.reports);
    return res->text.c_str();
}

negaff_error negaff_result_write_golden(const negaff_result* res, const char* dir) {
    if (!res || !dir) return fail(NEGAFF_ERR_NULL, "null argument");
    try {
        negaff::write_golden(dir, res->res.reports);
    } catch (const std::exception& e) {
        return fail(NEGAFF_ERR_IO, e.what());
    }
    return ok();
}

}  // extern "C"
