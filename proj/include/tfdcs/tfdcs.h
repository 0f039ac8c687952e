/* Copyright 2026 The tfdcs Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef TFDCS_TFDCS_H
#define TFDCS_TFDCS_H

/* C interface to the thermal coherent state library. Every call returns a
 * tfdcs_status; on failure tfdcs_last_error() describes the problem (the
 * message is per thread and valid until the next failing call). Handles
 * are opaque and released with the matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TFDCS_API __declspec(dllexport)
#else
#define TFDCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    TFDCS_OK = 0,
    TFDCS_ERR_INVALID_ARGUMENT = 1,
    TFDCS_ERR_INVALID_CUTOFF = 2,
    TFDCS_ERR_DIMENSION_MISMATCH = 3,
    TFDCS_ERR_CUTOFF_TOO_SMALL = 4,
    TFDCS_ERR_NON_FINITE = 5,
    TFDCS_ERR_NOT_HERMITIAN = 6,
    TFDCS_ERR_DEGENERATE = 7,
    TFDCS_ERR_QUADRATURE = 8,
    TFDCS_ERR_INTERNAL = 9
} tfdcs_status;

typedef enum { TFDCS_ROUND = 0, TFDCS_DOUBLE = 1, TFDCS_TROTTER = 2 } tfdcs_kind;
typedef enum { TFDCS_QP_P = 0, TFDCS_QP_Q = 1, TFDCS_QP_W = 2 } tfdcs_qp_kind;

typedef struct {
    double re;
    double im;
} tfdcs_complex;

/* cutoff > 0 fixes the per-mode dimension; cutoff == 0 doubles from an
 * initial estimate until the tail mass drops below tail_tol. */
typedef struct {
    int cutoff;
    double tail_tol;
    int max_dim;
} tfdcs_cutoff;

typedef struct {
    double hbar;
    double lambda;
    double epsilon;
} tfdcs_constants;

typedef struct {
    double mean_q;
    double mean_p;
    double var_q;
    double var_p;
} tfdcs_moments;

typedef struct {
    tfdcs_complex mean;
    double sigma; /* 0 for the point-mass limit */
    int point_mass;
} tfdcs_gaussian;

typedef struct {
    tfdcs_complex alpha_prime;
    tfdcs_complex zeta_prime;
    double phase;
} tfdcs_equivalence;

typedef struct {
    double chi2;
    tfdcs_complex g_s;
    tfdcs_complex g_i;
    double t1;
    double t2;
    int n;
    double hbar;
} tfdcs_opo;

typedef struct {
    uint64_t seed;
    double tail_tol;
    int grid_points;
    int sabotage;
    tfdcs_constants constants;
} tfdcs_verify_config;

typedef struct tfdcs_state tfdcs_state;
typedef struct tfdcs_density tfdcs_density;
typedef struct tfdcs_report tfdcs_report;

TFDCS_API const char* tfdcs_version(void);
TFDCS_API const char* tfdcs_last_error(void);
TFDCS_API const char* tfdcs_status_name(tfdcs_status status);

TFDCS_API tfdcs_cutoff tfdcs_cutoff_default(void);
TFDCS_API tfdcs_constants tfdcs_constants_default(void);

/* thermal parameters */
TFDCS_API tfdcs_status tfdcs_theta_of_beta(double beta, double epsilon, double* theta);

/* analytic maps */
TFDCS_API tfdcs_status tfdcs_map_trotter_to_round(tfdcs_complex alpha, tfdcs_complex zeta,
                                                  double theta, tfdcs_equivalence* out);
TFDCS_API tfdcs_status tfdcs_map_double_to_round(tfdcs_complex alpha, tfdcs_complex zeta,
                                                 double theta, tfdcs_complex* alpha_out,
                                                 tfdcs_complex* zeta_out);

/* states */
TFDCS_API tfdcs_status tfdcs_state_build(tfdcs_kind kind, tfdcs_complex alpha,
                                         tfdcs_complex zeta, double theta,
                                         const tfdcs_cutoff* cutoff, tfdcs_state** out);
TFDCS_API tfdcs_status tfdcs_state_build_trotter_finite(tfdcs_complex alpha,
                                                        tfdcs_complex zeta, double theta,
                                                        int slices, const tfdcs_cutoff* cutoff,
                                                        tfdcs_state** out);
TFDCS_API void tfdcs_state_free(tfdcs_state* state);
TFDCS_API int tfdcs_state_dim(const tfdcs_state* state);
TFDCS_API double tfdcs_state_tail_mass(const tfdcs_state* state);
/* copies the d*d amplitudes, index n_ordinary * d + n_tilde */
TFDCS_API tfdcs_status tfdcs_state_amplitudes(const tfdcs_state* state, tfdcs_complex* buffer,
                                              size_t length);
/* |candidate * conj(<ref|cand>)/|<ref|cand>| - ref| */
TFDCS_API tfdcs_status tfdcs_state_distance(const tfdcs_state* reference,
                                            const tfdcs_state* candidate, double* out);
TFDCS_API tfdcs_status tfdcs_state_quadratures(const tfdcs_state* state,
                                               const tfdcs_constants* constants,
                                               tfdcs_moments* out);
TFDCS_API tfdcs_status tfdcs_state_xi_residual(const tfdcs_state* state, double theta,
                                               tfdcs_complex f, double* out);
TFDCS_API tfdcs_status tfdcs_state_signal(const tfdcs_state* state, tfdcs_density** out);

/* reduced single-mode density matrices */
TFDCS_API void tfdcs_density_free(tfdcs_density* rho);
TFDCS_API int tfdcs_density_dim(const tfdcs_density* rho);
TFDCS_API double tfdcs_density_purity(const tfdcs_density* rho);
TFDCS_API double tfdcs_density_mean_number(const tfdcs_density* rho);
TFDCS_API tfdcs_status tfdcs_density_q_function(const tfdcs_density* rho, tfdcs_complex mu,
                                                double* out);
TFDCS_API tfdcs_status tfdcs_density_wigner(const tfdcs_density* rho, tfdcs_complex mu,
                                            double* out);

/* closed forms */
TFDCS_API tfdcs_status tfdcs_xi_eigenvalue(tfdcs_kind kind, tfdcs_complex alpha,
                                           tfdcs_complex zeta, double theta,
                                           tfdcs_complex* out);
TFDCS_API tfdcs_status tfdcs_fig1_ordinate(tfdcs_kind kind, double theta, double* out);
TFDCS_API tfdcs_status tfdcs_mean_quadratures(tfdcs_kind kind, tfdcs_complex alpha,
                                              double theta, const tfdcs_constants* constants,
                                              double* mean_q, double* mean_p);
TFDCS_API tfdcs_status tfdcs_uncertainty_product(double theta, const tfdcs_constants* constants,
                                                 double* out);
TFDCS_API tfdcs_status tfdcs_quasi(tfdcs_qp_kind which, tfdcs_kind kind, tfdcs_complex alpha,
                                   double theta, tfdcs_gaussian* out);
TFDCS_API double tfdcs_gaussian_eval(const tfdcs_gaussian* g, tfdcs_complex x);

/* optical parametric oscillator */
TFDCS_API tfdcs_status tfdcs_opo_sliced_distance(const tfdcs_opo* params, int d, double* out);
TFDCS_API tfdcs_status tfdcs_opo_closed_state(const tfdcs_opo* params,
                                              const tfdcs_cutoff* cutoff, tfdcs_state** out);

/* property verification */
TFDCS_API tfdcs_verify_config tfdcs_verify_config_default(void);
TFDCS_API tfdcs_status tfdcs_verify(const tfdcs_verify_config* config, tfdcs_report** out);
TFDCS_API void tfdcs_report_free(tfdcs_report* report);
TFDCS_API int tfdcs_report_passed(const tfdcs_report* report);
TFDCS_API int tfdcs_report_failures(const tfdcs_report* report);
TFDCS_API const char* tfdcs_report_text(const tfdcs_report* report);
TFDCS_API const char* tfdcs_report_json(const tfdcs_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TFDCS_TFDCS_H */
