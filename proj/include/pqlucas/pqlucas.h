/* Copyright 2026 The pqlucas Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PQLUCAS_PQLUCAS_H
#define PQLUCAS_PQLUCAS_H

/*
 * C interface to the pqlucas library: truncated power series, (p,q)-Lucas
 * sequences, the bi-univalent class operator, closed-form coefficient and
 * Fekete-Szego bounds, and the grid oracle that checks them.
 *
 * Every fallible call returns a pql_status. On failure the message of the
 * most recent error on the calling thread is available from
 * pql_last_error(). Series are opaque handles owned by the caller and
 * released with pql_series_destroy().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PQLUCAS_BUILDING)
#    define PQL_API __declspec(dllexport)
#  else
#    define PQL_API __declspec(dllimport)
#  endif
#else
#  define PQL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pql_status {
  PQL_OK = 0,
  PQL_ERR_NULL_POINTER = 1,
  PQL_ERR_INVALID_ARGUMENT = 2,
  PQL_ERR_DOMAIN = 3,     /* series precondition failed */
  PQL_ERR_DEGENERATE = 4, /* closed form divides by zero */
  PQL_ERR_BUFFER_TOO_SMALL = 5,
  PQL_ERR_INTERNAL = 6
} pql_status;

PQL_API const char* pql_status_string(pql_status status);
/* Message for the last failure on this thread; "" if none. */
PQL_API const char* pql_last_error(void);
PQL_API const char* pql_version(void);

/* ---- truncated series ---------------------------------------------- */

typedef struct pql_series pql_series;

/* count >= 1 coefficients c_0..c_{count-1}; im may be NULL (real series). */
PQL_API pql_status pql_series_create(const double* re, const double* im,
                                     size_t count, pql_series** out);
PQL_API void pql_series_destroy(pql_series* s);
PQL_API size_t pql_series_order(const pql_series* s);
PQL_API pql_status pql_series_coeff(const pql_series* s, size_t k, double* re,
                                    double* im);
/* Real parts of c_0..c_N into out (capacity out_len >= order + 1). */
PQL_API pql_status pql_series_real_coeffs(const pql_series* s, double* out,
                                          size_t out_len);

PQL_API pql_status pql_series_add(const pql_series* a, const pql_series* b,
                                  pql_series** out);
PQL_API pql_status pql_series_mul(const pql_series* a, const pql_series* b,
                                  pql_series** out);
PQL_API pql_status pql_series_derivative(const pql_series* s,
                                         pql_series** out);
PQL_API pql_status pql_series_pow_real(const pql_series* s, double exponent,
                                       pql_series** out);
PQL_API pql_status pql_series_compose(const pql_series* outer,
                                      const pql_series* inner,
                                      pql_series** out);

/* Normalized functions are passed as a_2..a_M (count = M - 1). */
PQL_API pql_status pql_revert_series(const double* a, size_t count,
                                     size_t order, pql_series** out);
/* out receives count transformed coefficients a_n / n. */
PQL_API pql_status pql_alexander_transform(const double* a, size_t count,
                                           double* out);

/* ---- (p,q)-Lucas ---------------------------------------------------- */

PQL_API double pql_eval_poly(const double* coeffs, size_t count, double x);
/* L_0..L_K into out (out_len >= K + 1). */
PQL_API pql_status pql_lucas_sequence(double p, double q, int max_index,
                                      double* out, size_t out_len);
PQL_API pql_status pql_lucas_generating_series(double p, double q,
                                               size_t order, pql_series** out);

/* ---- class operator ------------------------------------------------- */

typedef struct pql_class_params {
  double lambda;
  double mu;
  double delta;
  double alpha;
} pql_class_params;

PQL_API pql_status pql_params_validate(const pql_class_params* params);
PQL_API pql_status pql_params_derived(const pql_class_params* params,
                                      double* xi, double* c1, double* c2);

typedef struct pql_preset_overrides {
  int has_lambda;
  double lambda;
  int has_mu;
  double mu;
  int has_delta;
  double delta;
  int has_alpha;
  double alpha;
} pql_preset_overrides;

/* name: "caglar", "srivastava", "bistarlike" or "mu1". overrides may be NULL. */
PQL_API pql_status pql_preset(const char* name,
                              const pql_preset_overrides* overrides,
                              pql_class_params* out);

/* D[f] through z^order, or D[f^{-1}] when inverse_side != 0. */
PQL_API pql_status pql_apply_operator(const pql_class_params* params,
                                      const double* a, size_t count,
                                      size_t order, int inverse_side,
                                      pql_series** out);

/* Entries ordered: z coefficient, z^2 coefficient, w coefficient, w^2. */
typedef struct pql_identity_report {
  double pipeline[4];
  double closed_form[4];
  double residual[4];
  double max_residual;
} pql_identity_report;

PQL_API pql_status pql_coefficient_identities(const pql_class_params* params,
                                              double a2, double a3,
                                              pql_identity_report* out);

typedef enum pql_member_mode {
  PQL_MEMBER_OPERATOR = 0,
  PQL_MEMBER_STARLIKE = 1,
  PQL_MEMBER_CONVEX = 2
} pql_member_mode;

typedef struct pql_disk_grid {
  double r_max;
  int radii;
  int angles;
  size_t inverse_order;
} pql_disk_grid;

PQL_API pql_disk_grid pql_default_disk_grid(void);

typedef struct pql_membership_report {
  int pass;
  double min_real_part;
  double min_margin;
  double worst_re;
  double worst_im;
  int worst_on_inverse;
  size_t points_checked;
  size_t flagged_points;
} pql_membership_report;

PQL_API pql_status pql_check_membership(const pql_class_params* params,
                                        const double* a, size_t count,
                                        const pql_disk_grid* grid,
                                        pql_member_mode mode, unsigned threads,
                                        pql_membership_report* out);

/* ---- bounds --------------------------------------------------------- */

typedef struct pql_bound_inputs {
  pql_class_params params;
  double p;
  double q;
  double upsilon;
} pql_bound_inputs;

typedef enum pql_regime {
  PQL_REGIME_CASE1 = 0,
  PQL_REGIME_CASE2 = 1,
  PQL_REGIME_BOUNDARY = 2,
  PQL_REGIME_DEGENERATE = 3
} pql_regime;

enum {
  PQL_FLAG_DENOMINATOR_VANISHES = 1u << 0,
  PQL_FLAG_L1_ZERO = 1u << 1,
  PQL_FLAG_UPSILON_ONE_LIMIT = 1u << 2,
  PQL_FLAG_STATED_THRESHOLD_DIFFERS = 1u << 3,
  PQL_FLAG_COROLLARY_INCONSISTENT = 1u << 4
};

typedef struct pql_bound_report {
  double value; /* +inf when unbounded */
  int unbounded;
  pql_regime regime;
  double theta;
  int has_upsilon_x;
  double upsilon_x;
  unsigned flags;
  int has_phi;
  double phi;
  int has_thresholds;
  double consistent_threshold;
  double stated_threshold;
} pql_bound_report;

PQL_API const char* pql_regime_name(pql_regime regime);
/* Text for a single flag bit. */
PQL_API const char* pql_flag_text(unsigned flag);

PQL_API pql_status pql_bound_a2(const pql_bound_inputs* in,
                                pql_bound_report* out);
PQL_API pql_status pql_bound_a3(const pql_bound_inputs* in,
                                pql_bound_report* out);
PQL_API pql_status pql_phi(const pql_bound_inputs* in, double* out);
PQL_API pql_status pql_fekete_szego_bound(const pql_bound_inputs* in,
                                          pql_bound_report* out);

/* ---- oracle --------------------------------------------------------- */

typedef struct pql_schwarz_sample {
  double r1;
  double r2;
  double s1;
  double s2;
} pql_schwarz_sample;

typedef struct pql_reconstructed {
  double a2_sq;
  double a2_abs;
  double a3;
} pql_reconstructed;

typedef enum pql_functional {
  PQL_FUNCTIONAL_ABS_A2 = 0,
  PQL_FUNCTIONAL_ABS_A3 = 1,
  PQL_FUNCTIONAL_FEKETE = 2
} pql_functional;

typedef enum pql_constraint_mode {
  PQL_MODE_PAPER = 0,
  PQL_MODE_SCHWARZ = 1
} pql_constraint_mode;

PQL_API const char* pql_functional_name(pql_functional f);
PQL_API const char* pql_mode_name(pql_constraint_mode m);

PQL_API pql_status pql_reconstruct(const pql_bound_inputs* in,
                                   const pql_schwarz_sample* s,
                                   pql_reconstructed* out);
PQL_API pql_status pql_fekete_value(const pql_bound_inputs* in,
                                    const pql_schwarz_sample* s, double* out);

typedef struct pql_sweep_report {
  pql_functional functional;
  pql_constraint_mode mode;
  double supremum;
  pql_schwarz_sample argmax;
  pql_bound_report bound;
  double ratio;
  int pass;
  size_t points;
} pql_sweep_report;

PQL_API pql_status pql_sweep_max(const pql_bound_inputs* in,
                                 pql_functional functional, size_t grid_n,
                                 pql_constraint_mode mode, unsigned threads,
                                 pql_sweep_report* out);

typedef struct pql_verify_report {
  pql_bound_inputs inputs;
  pql_sweep_report sweeps[3]; /* abs_a2, abs_a3, fekete */
  int pass;
} pql_verify_report;

PQL_API pql_status pql_verify_bounds(const pql_bound_inputs* in,
                                     size_t grid_n, pql_constraint_mode mode,
                                     unsigned threads, pql_verify_report* out);

/* Nondegenerate draws with lambda in [1,3], mu in [0,3], delta in [0,2],
 * p, q in [-2,2] (|p| >= 0.05), upsilon in [-2,4], |theta| >= 0.05.
 * Deterministic for a given seed. */
PQL_API pql_status pql_random_draws(uint64_t seed, size_t count,
                                    pql_bound_inputs* out);

#ifdef __cplusplus
}
#endif

#endif /* PQLUCAS_PQLUCAS_H */
