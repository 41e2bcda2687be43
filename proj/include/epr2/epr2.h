// Copyright 2026 The EPR2 Authors
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

/* C interface to the EPR2 local/nonlocal decomposition library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an epr2_status; on
 * failure a description is available from epr2_last_error() on the same
 * thread until the next failing call. Vectors are double[3] directions and
 * joint tables are double[4] ordered (+,+), (+,-), (-,+), (-,-).
 */

#ifndef EPR2_EPR2_H
#define EPR2_EPR2_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EPR2_API __declspec(dllexport)
#else
#define EPR2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum epr2_status {
    EPR2_OK = 0,
    /* Invalid input: bad state, parameters, directions, spec syntax. */
    EPR2_ERR_VALIDATION = 1,
    /* A numerical procedure failed or a check could not be evaluated. */
    EPR2_ERR_NUMERICAL = 2,
    EPR2_ERR_IO = 3,
    /* Null handle or pointer argument. */
    EPR2_ERR_ARGUMENT = 4,
} epr2_status;

typedef struct epr2_state epr2_state;
typedef struct epr2_split epr2_split;

typedef struct epr2_check_result {
    double p_local;
    /* 0 when p_local is 1 and the remainder is undefined. */
    int has_remainder;
    double min_remainder;
    double max_local_deviation;
    double min_ratio;
    double argmin_a[3];
    double argmin_b[3];
} epr2_check_result;

typedef struct epr2_scatter_summary {
    size_t rows;
    double min_margin;
} epr2_scatter_summary;

EPR2_API const char *epr2_last_error(void);
EPR2_API const char *epr2_version(void);
EPR2_API void epr2_string_free(char *s);

/* States. spec uses the mini-language pure:theta=T, werner:x=X,
 * gw:x=X,theta=T, bd:x=..,y=..,a=..,b=..,gamma=.., file:PATH. */
EPR2_API epr2_status epr2_state_parse(const char *spec, epr2_state **out);
EPR2_API epr2_status epr2_state_from_json(const char *json, epr2_state **out);
EPR2_API epr2_status epr2_state_to_json(const epr2_state *state, char **out);
EPR2_API void epr2_state_free(epr2_state *state);
EPR2_API epr2_status epr2_state_matrix(const epr2_state *state, double re[16], double im[16]);
EPR2_API epr2_status epr2_concurrence(const epr2_state *state, double *out);
EPR2_API epr2_status epr2_joint_table(const epr2_state *state, const double a[3], const double b[3],
                                      double table[4]);

/* Splits. epr2_split_build uses the dedicated construction for named
 * families and the general construction for file states; epr2_split_general
 * always uses the general construction. */
EPR2_API epr2_status epr2_split_build(const epr2_state *state, epr2_split **out);
EPR2_API epr2_status epr2_split_general(const epr2_state *state, epr2_split **out);
/* Splits loaded from JSON carry no source state: eval and simulate work,
 * remainder and check report EPR2_ERR_VALIDATION. */
EPR2_API epr2_status epr2_split_from_json(const char *json, epr2_split **out);
EPR2_API epr2_status epr2_split_to_json(const epr2_split *split, char **out);
EPR2_API void epr2_split_free(epr2_split *split);
EPR2_API epr2_status epr2_split_p_local(const epr2_split *split, double *out);
EPR2_API epr2_status epr2_split_branch_count(const epr2_split *split, size_t *out);
EPR2_API epr2_status epr2_split_eval(const epr2_split *split, const double A[3], const double B[3], double *out);
EPR2_API epr2_status epr2_split_remainder(const epr2_split *split, const double A[3], const double B[3],
                                          double *out);

/* Minimum remainder on a grid x grid Fibonacci lattice plus the minimum of
 * P_Q / P_L refined by `refine` golden-section rounds. */
EPR2_API epr2_status epr2_check(const epr2_split *split, int grid, int refine, epr2_check_result *out);

/* Monte-Carlo LHV simulation; `expected` (may be NULL) receives the model's
 * exact table. */
EPR2_API epr2_status epr2_simulate(const epr2_split *split, const double a[3], const double b[3],
                                   uint64_t samples, uint64_t seed, double freq[4], double expected[4]);

/* Writes the generalized Werner scatter CSV. */
EPR2_API epr2_status epr2_scatter(uint64_t seed, size_t count, const char *path, epr2_scatter_summary *out);

#ifdef __cplusplus
}
#endif

#endif
