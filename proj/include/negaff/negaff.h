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

/* C interface to the verification engine. All handles are opaque; every
 * function returning negaff_error reports failures through the code and
 * negaff_last_error(). */
#ifndef NEGAFF_H
#define NEGAFF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NEGAFF_API __declspec(dllexport)
#else
#define NEGAFF_API __attribute__((visibility("default")))
#endif

typedef enum negaff_error {
    NEGAFF_OK = 0,
    NEGAFF_ERR_NULL = 1,           /* a required pointer was null */
    NEGAFF_ERR_INVALID_ARGUMENT = 2,
    NEGAFF_ERR_INVALID_CONFIG = 3, /* rejected by validation at run time */
    NEGAFF_ERR_IO = 4,
    NEGAFF_ERR_RANGE = 5,          /* index out of range */
    NEGAFF_ERR_INTERNAL = 6
} negaff_error;

typedef enum negaff_status { NEGAFF_PASS = 0, NEGAFF_FAIL = 1, NEGAFF_INCONCLUSIVE = 2 } negaff_status;

typedef struct negaff_config negaff_config;
typedef struct negaff_result negaff_result;

/* Message for the last error on the calling thread; never null. */
NEGAFF_API const char* negaff_last_error(void);

NEGAFF_API size_t negaff_suite_count(void);
NEGAFF_API const char* negaff_suite_name(size_t i);

NEGAFF_API negaff_error negaff_config_create(negaff_config** out);
NEGAFF_API void negaff_config_destroy(negaff_config* cfg);
NEGAFF_API negaff_error negaff_config_set_levels(negaff_config* cfg, const int* levels, size_t n);
NEGAFF_API negaff_error negaff_config_set_truncation(negaff_config* cfg, int n);
NEGAFF_API negaff_error negaff_config_set_fock_degree(negaff_config* cfg, int d);
NEGAFF_API negaff_error negaff_config_set_sectors(negaff_config* cfg, int w);
NEGAFF_API negaff_error negaff_config_set_suites(negaff_config* cfg, const char* const* names, size_t n);
/* name is "hz-y" or "e-exchange". */
NEGAFF_API negaff_error negaff_config_set_literal(negaff_config* cfg, const char* name, int on);
NEGAFF_API negaff_error negaff_config_set_jobs(negaff_config* cfg, int jobs);
NEGAFF_API negaff_error negaff_config_validate(const negaff_config* cfg);

NEGAFF_API negaff_error negaff_run(const negaff_config* cfg, negaff_result** out);
NEGAFF_API void negaff_result_destroy(negaff_result* res);

/* 0 all pass, 2 any failure, 3 otherwise inconclusive. */
NEGAFF_API int negaff_result_exit_code(const negaff_result* res);
NEGAFF_API size_t negaff_result_count(const negaff_result* res);
NEGAFF_API negaff_error negaff_result_entry(const negaff_result* res, size_t i, const char** id, int* k, int* sector,
                                            negaff_status* status);

/* Rendered output, owned by the result. */
NEGAFF_API const char* negaff_result_json(negaff_result* res);
NEGAFF_API const char* negaff_result_text(negaff_result* res);
NEGAFF_API negaff_error negaff_result_write_golden(const negaff_result* res, const char* dir);

#ifdef __cplusplus
}
#endif

#endif
