/*
   Copyright 2026 The pcurv Authors

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

/* C interface to the pcurv library. Objects are opaque and owned by the
   caller; strings returned as char* are released with pcurv_string_free.
   Functions report failures through pcurv_status and leave a message for
   pcurv_last_error (per thread). */

#ifndef PCURV_H
#define PCURV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PCURV_API __declspec(dllexport)
#else
#define PCURV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    PCURV_OK = 0,
    PCURV_ERROR = 1,
    PCURV_PARSE_ERROR = 2,
    PCURV_PRECONDITION = 3,      /* p <= r, p not prime, pole, epsilon unattainable */
    PCURV_SELECTION_FAILED = 4,  /* Monte Carlo found no admissible points */
    PCURV_CHECK_MISMATCH = 5,    /* fast and naive results differ */
    PCURV_INVALID_ARGUMENT = 6
} pcurv_status;

typedef enum { PCURV_ALGO_DET = 0, PCURV_ALGO_MC = 1, PCURV_ALGO_NAIVE = 2 } pcurv_algo;

typedef struct {
    pcurv_algo algo;
    double epsilon;
    uint64_t seed;
    int check;
    int profile;
    unsigned threads;
} pcurv_options;

typedef struct pcurv_problem pcurv_problem;
typedef struct pcurv_result pcurv_result;

PCURV_API const char* pcurv_version(void);
PCURV_API const char* pcurv_last_error(void);
PCURV_API void pcurv_string_free(char* s);

PCURV_API void pcurv_options_init(pcurv_options* opts);

/* Operator text over F_q, q = p^ext, e.g. "x*Dx^2 + Dx + 1". */
PCURV_API pcurv_status pcurv_problem_from_operator(uint64_t p, unsigned ext, const char* text, pcurv_problem** out);
/* {"p":..,"ext":..,"f_A":"..","A_tilde":[[..]]}; p = 0 takes p from the
   document, otherwise it must agree with it or be absent there. */
PCURV_API pcurv_status pcurv_problem_from_system_json(uint64_t p, unsigned ext, const char* json,
                                                      pcurv_problem** out);
PCURV_API void pcurv_problem_free(pcurv_problem* pb);
PCURV_API size_t pcurv_problem_order(const pcurv_problem* pb);
PCURV_API size_t pcurv_problem_degree(const pcurv_problem* pb);

/* On PCURV_CHECK_MISMATCH *out is still set. */
PCURV_API pcurv_status pcurv_run(const pcurv_problem* pb, const pcurv_options* opts, pcurv_result** out);
PCURV_API void pcurv_result_free(pcurv_result* res);
PCURV_API size_t pcurv_result_count(const pcurv_result* res);
/* Factor i in X and T, X = x^p; valid while res lives. */
PCURV_API const char* pcurv_result_factor(const pcurv_result* res, size_t i);
/* 1 match, 0 mismatch, -1 not checked. */
PCURV_API int pcurv_result_check_match(const pcurv_result* res);
/* Copies up to cap ranks of the nilpotent part's profile into buf and
   returns the full length; 0 when no profile was requested. */
PCURV_API size_t pcurv_result_profile(const pcurv_result* res, size_t* buf, size_t cap);
PCURV_API double pcurv_result_seconds(const pcurv_result* res);
PCURV_API char* pcurv_result_json(const pcurv_result* res);
/* Re-serializes a result document after parsing it. */
PCURV_API pcurv_status pcurv_result_json_roundtrip(const char* json, char** out);

/* CSV "p,median_seconds,runs" for the problem's input re-read over each F_p. */
PCURV_API pcurv_status pcurv_bench_scaling(const pcurv_problem* pb, const uint64_t* primes, size_t count,
                                           unsigned repeats, char** csv_out);

/* Rank profile against a block of size total - top that is a symmetric
   power; n_max = 0 selects the default range. trace_out gets one line per
   step, newline separated. */
PCURV_API pcurv_status pcurv_feasibility_check(const size_t* ranks, size_t len, size_t total, size_t top,
                                               size_t n_max, int* feasible, char** trace_out);

#ifdef __cplusplus
}
#endif

#endif
