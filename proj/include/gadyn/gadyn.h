/*
   Copyright 2026 The gadyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * gadyn C API.
 *
 * Problems and verdicts are opaque handles. Every function returns a gadyn_status; on failure
 * gadyn_last_error() describes the problem for the calling thread. Strings returned through
 * char** outputs are owned by the caller and released with gadyn_string_free.
 */

#ifndef GADYN_GADYN_H
#define GADYN_GADYN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GADYN_BUILDING_LIBRARY)
#define GADYN_API __declspec(dllexport)
#else
#define GADYN_API __declspec(dllimport)
#endif
#else
#define GADYN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gadyn_status {
    GADYN_OK = 0,
    GADYN_ERR_INVALID_ARGUMENT = 1,
    GADYN_ERR_PARSE = 2,
    GADYN_ERR_REDUCIBLE_MODULUS = 3,
    GADYN_ERR_NOT_DOMINANT = 4,
    GADYN_ERR_NOT_INVERTIBLE = 5,
    GADYN_ERR_DIVISION_BY_ZERO = 6,
    GADYN_ERR_CAPACITY = 7,
    GADYN_ERR_UNKNOWN_CLASSIFICATION = 8,
    GADYN_ERR_DIGEST_MISMATCH = 9,
    GADYN_ERR_VERIFY_FAILED = 10,
    GADYN_ERR_INTERNAL = 11
} gadyn_status;

typedef struct gadyn_problem gadyn_problem;
typedef struct gadyn_verdict gadyn_verdict;

typedef struct gadyn_options {
    unsigned d;             /* transcendence degree; 0 takes the problem's value */
    size_t density_M;       /* orbit length; 0 takes the problem's value or 25 */
    unsigned density_D;     /* monomial degree bound; 0 takes the problem's value or 3 */
    unsigned density_trials;
    uint64_t seed;
    uint64_t max_power;     /* largest eigenvalue period tested exactly */
} gadyn_options;

GADYN_API const char* gadyn_version(void);
GADYN_API const char* gadyn_status_name(gadyn_status status);
/* Message for the most recent failure on this thread; empty after success. */
GADYN_API const char* gadyn_last_error(void);
GADYN_API void gadyn_string_free(char* s);

GADYN_API void gadyn_options_init(gadyn_options* opt);

/* Parses and validates problem-file text. */
GADYN_API gadyn_status gadyn_problem_parse(const char* text, gadyn_problem** out);
GADYN_API void gadyn_problem_free(gadyn_problem* problem);
GADYN_API gadyn_status gadyn_problem_canonical(const gadyn_problem* problem, char** out);
GADYN_API gadyn_status gadyn_problem_digest(const gadyn_problem* problem, char** out);
GADYN_API gadyn_status gadyn_problem_size(const gadyn_problem* problem, size_t* n);

/* GADYN_ERR_UNKNOWN_CLASSIFICATION when an eigenvalue period exceeds the search bound. */
GADYN_API gadyn_status gadyn_classify(const gadyn_problem* problem, const gadyn_options* opt, gadyn_verdict** out);
GADYN_API void gadyn_verdict_free(gadyn_verdict* verdict);
/* 'A', 'B' or 'C'. */
GADYN_API gadyn_status gadyn_verdict_kind(const gadyn_verdict* verdict, char* kind);
GADYN_API gadyn_status gadyn_verdict_certificate(const gadyn_verdict* verdict, char** out);
GADYN_API gadyn_status gadyn_verdict_summary(const gadyn_verdict* verdict, char** out);

/* GADYN_OK, GADYN_ERR_DIGEST_MISMATCH or GADYN_ERR_VERIFY_FAILED; the report names the
 * identity checked. */
GADYN_API gadyn_status gadyn_verify(const gadyn_problem* problem, const char* certificate, char** report);

/* Runs a tool on the problem. args is a list of key=value pairs separated by ';' or
 * newlines, or NULL. */
GADYN_API gadyn_status gadyn_tool(const gadyn_problem* problem, const char* name, const char* args, char** out);

#ifdef __cplusplus
}
#endif

#endif
