/*
 * Copyright 2026 The mzqfi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to mzqfi: quantum Fisher information of an unbalanced
 * Mach-Zehnder interferometer, its optimal first-splitter transmission, and a
 * truncated Fock-space oracle.
 *
 * Conventions
 *   - Every function that can fail returns mzqfi_status. On failure the
 *     thread-local message from mzqfi_last_error() describes the problem and
 *     output arguments are left untouched.
 *   - Handles (mzqfi_state, mzqfi_fock) are opaque and owned by the caller;
 *     release them with the matching *_free function. Passing NULL to a free
 *     function is a no-op.
 *   - Strings returned through char ** are heap allocated; release them with
 *     mzqfi_string_free.
 *   - Angles are radians. The transmission t is the real amplitude |T| in
 *     [0, 1], with R = i sqrt(1 - t^2).
 */

#ifndef MZQFI_H
#define MZQFI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MZQFI_BUILDING_LIBRARY)
#define MZQFI_API __declspec(dllexport)
#else
#define MZQFI_API __declspec(dllimport)
#endif
#else
#define MZQFI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mzqfi_status {
    MZQFI_OK = 0,
    MZQFI_ERR_INVALID_ARGUMENT = 1,
    MZQFI_ERR_INTEGRITY = 2,
    MZQFI_ERR_DEGENERATE_FSS = 3,
    MZQFI_ERR_NON_POSITIVE_FISHER = 4,
    MZQFI_ERR_CUTOFF_TOO_SMALL = 5,
    MZQFI_ERR_ALL_COEFFS_ZERO = 6,
    MZQFI_ERR_CONFIG = 7,
    MZQFI_ERR_VERIFICATION = 8,
    MZQFI_ERR_IO = 9,
    MZQFI_ERR_INTERNAL = 100
} mzqfi_status;

typedef enum mzqfi_port_kind {
    MZQFI_PORT_VACUUM = 0,
    MZQFI_PORT_COHERENT = 1,
    MZQFI_PORT_FOCK = 2,
    MZQFI_PORT_SQUEEZED_VACUUM = 3,
    MZQFI_PORT_SQUEEZED_COHERENT = 4
} mzqfi_port_kind;

/* Fields not used by a kind are ignored. */
typedef struct mzqfi_port {
    mzqfi_port_kind kind;
    double amplitude;
    double amplitude_phase;
    double squeeze;
    double squeeze_phase;
    int fock_n;
} mzqfi_port;

typedef enum mzqfi_qfi_kind {
    MZQFI_QFI_2P = 0,      /* two-parameter, no external reference */
    MZQFI_QFI_I = 1,       /* single phase in the lower arm */
    MZQFI_QFI_I_UPPER = 2, /* single phase in the upper arm */
    MZQFI_QFI_II = 3       /* symmetric +-phi/2 */
} mzqfi_qfi_kind;

typedef enum mzqfi_advantage {
    MZQFI_ADVANTAGE_NONE_FOR_FI = 0,
    MZQFI_ADVANTAGE_NONE_FOR_FII = 1,
    MZQFI_ADVANTAGE_NEITHER = 2
} mzqfi_advantage;

typedef struct mzqfi_shorthand {
    double v_plus;
    double v_minus;
    double v_cov;
    double a_coeff;
    double s_plus;
    double s_minus;
    double p_coeff;
} mzqfi_shorthand;

typedef struct mzqfi_fisher_matrix {
    double f_ss;
    double f_dd;
    double f_sd;
} mzqfi_fisher_matrix;

typedef struct mzqfi_qfi {
    double f_2p;
    double f_i;
    double f_i_upper;
    double f_ii;
    mzqfi_fisher_matrix matrix;
} mzqfi_qfi;

typedef struct mzqfi_coeff_bundle {
    mzqfi_qfi_kind kind;
    double c[5];    /* c[3], c[4] are zero for the three-term kinds */
    int fss_limit;  /* 2p only: coefficients taken from the F_ss -> 0 limit */
} mzqfi_coeff_bundle;

typedef struct mzqfi_opt_report {
    mzqfi_qfi_kind kind;
    int irrelevant; /* constant QFI; t_opt is NaN */
    double t_opt;
    double f_max;
    char case_label[48];
    size_t num_candidates;
    mzqfi_coeff_bundle bundle;
} mzqfi_opt_report;

typedef struct mzqfi_state mzqfi_state;
typedef struct mzqfi_fock mzqfi_fock;

MZQFI_API const char *mzqfi_version(void);
MZQFI_API const char *mzqfi_status_name(mzqfi_status status);
/* Message of the last failure on the calling thread, "" if none. */
MZQFI_API const char *mzqfi_last_error(void);
MZQFI_API void mzqfi_string_free(char *s);

/* ---- input states ---------------------------------------------------- */

MZQFI_API mzqfi_status mzqfi_state_separable(const mzqfi_port *port0, const mzqfi_port *port1, mzqfi_state **out);
MZQFI_API mzqfi_status mzqfi_state_tmsv(double r, double phase, mzqfi_state **out);
MZQFI_API void mzqfi_state_free(mzqfi_state *state);
MZQFI_API mzqfi_status mzqfi_state_shorthand(const mzqfi_state *state, mzqfi_shorthand *out);

/* ---- Fisher quantities ----------------------------------------------- */

MZQFI_API mzqfi_status mzqfi_fisher_matrix_at(const mzqfi_shorthand *sh, double t, mzqfi_fisher_matrix *out);
MZQFI_API mzqfi_status mzqfi_qfi_all(const mzqfi_shorthand *sh, double t, mzqfi_qfi *out);
MZQFI_API mzqfi_status mzqfi_coeffs(const mzqfi_shorthand *sh, mzqfi_qfi_kind kind, mzqfi_coeff_bundle *out);
MZQFI_API mzqfi_status mzqfi_qcrb(double f, int64_t repetitions, double *out);
MZQFI_API mzqfi_status mzqfi_no_advantage(const mzqfi_shorthand *sh, mzqfi_advantage *out);

/* ---- optimal transmission ------------------------------------------- */

MZQFI_API mzqfi_status mzqfi_optimize(const mzqfi_shorthand *sh, mzqfi_qfi_kind kind, mzqfi_opt_report *out);
/* points >= 1000. unique may be NULL. */
MZQFI_API mzqfi_status mzqfi_grid_verify(const mzqfi_shorthand *sh, mzqfi_qfi_kind kind, size_t points,
                                         double *t_best, double *f_best, int *unique);
/* coeffs = {a4, a3, a2, a1, a0}. Writes up to 4 real roots in [-1, 1]. */
MZQFI_API mzqfi_status mzqfi_solve_quartic(const double coeffs[5], double roots[4], size_t *num_roots);

/* ---- Fock-space oracle ----------------------------------------------- */

/* cutoff <= 0 selects an automatic cutoff. */
MZQFI_API mzqfi_status mzqfi_fock_build(const mzqfi_state *state, int cutoff, mzqfi_fock **out);
MZQFI_API mzqfi_status mzqfi_fock_apply_bs(const mzqfi_fock *in, double t, mzqfi_fock **out);
MZQFI_API mzqfi_status mzqfi_fock_apply_phases(const mzqfi_fock *in, double phi1, double phi2, mzqfi_fock **out);
MZQFI_API void mzqfi_fock_free(mzqfi_fock *fock);
MZQFI_API mzqfi_status mzqfi_fock_info(const mzqfi_fock *fock, int *cutoff, double *norm, double *truncated_norm);
MZQFI_API mzqfi_status mzqfi_fock_amplitude(const mzqfi_fock *fock, int n0, int n1, double *re, double *im);
MZQFI_API mzqfi_status mzqfi_oracle_fisher(const mzqfi_fock *after_bs, mzqfi_fisher_matrix *out);
MZQFI_API mzqfi_status mzqfi_oracle_qfi(const mzqfi_fock *after_bs, mzqfi_qfi *out);
MZQFI_API mzqfi_status mzqfi_bs2_check(const mzqfi_state *state, double t, const double *t_primes, size_t n,
                                       double phi1, double phi2, double *max_deviation);

/* ---- scenario runner ------------------------------------------------- */

/* Sweep table as CSV. */
MZQFI_API mzqfi_status mzqfi_run_sweep(const char *config_json, char **csv_out);
/* Optimization report CSV; oracle_csv_out receives the oracle comparison
 * table, or "" when the config has no oracle block. */
MZQFI_API mzqfi_status mzqfi_run_optimize(const char *config_json, char **csv_out, char **oracle_csv_out);
/* Writes the figure CSVs into out_dir (created if missing). The
 * newline-separated file names are returned through files_out (may be NULL). */
MZQFI_API mzqfi_status mzqfi_run_figure(int id, const char *out_dir, char **files_out);
/* full: 0 quick, 1 full. flags: bit 0 negates S+ on the analytic side (test
 * hook). passed receives 1 or 0. A failing suite is not an error status. */
MZQFI_API mzqfi_status mzqfi_run_verify(int full, unsigned flags, char **text_out, char **json_out, int *passed);

#define MZQFI_VERIFY_FLIP_S_PLUS 1u

#ifdef __cplusplus
}
#endif

#endif /* MZQFI_H */
