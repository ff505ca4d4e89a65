// Copyright 2026 The gateport Authors
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

/* C interface to the gateport library.
 *
 * Gates and bases are opaque handles built from spec strings (see
 * gp_gate_parse / gp_basis_parse). Report functions return a heap-allocated
 * JSON (or CSV) string through `out`, released with gp_string_free. Every
 * function returns a gp_status; on failure gp_last_error() describes it.
 * Matrices cross the boundary as interleaved (re, im) doubles in row-major
 * order.
 */
#ifndef GATEPORT_GATEPORT_H
#define GATEPORT_GATEPORT_H

#include <stdint.h>

#if defined(_WIN32)
#define GP_API __declspec(dllexport)
#else
#define GP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gp_status {
  GP_OK = 0,
  GP_ERR_USAGE = 1,      /* malformed spec, bad argument */
  GP_ERR_NUMERIC = 2,    /* non-unitary gate, non-orthonormal basis, ... */
  GP_ERR_SELFCHECK = 3,  /* gp_tables found a mismatch; the report is still produced */
  GP_ERR_INTERNAL = 4
} gp_status;

typedef struct gp_gate gp_gate;
typedef struct gp_basis gp_basis;

GP_API const char* gp_version(void);

/* Message for the last failing call on this thread ("" if none). */
GP_API const char* gp_last_error(void);

GP_API void gp_string_free(char* s);

/* A tol argument <= 0 selects the default: GATEPORT_TOL from the
 * environment if set to a positive number, else the command's built-in value
 * (separability 1e-7, state teleportability 1e-8, basis unitarity 1e-9).
 * Reports echo the tolerance they used. */

/* Gate specs: cnot, cz, swap, q, r, c_pi8, h_c_pi8, cnot_sqrt, swap_sqrt,
 * exp_yy, identity, "t:phi,xi", "kak:t1,t2,t3", "haar:seed", a JSON document
 * {"matrix": ...} given inline or as a file path. Angles accept forms such as
 * 0.39, pi/8, -3pi/4. */
GP_API gp_status gp_gate_parse(const char* spec, gp_gate** out);
GP_API gp_status gp_gate_from_matrix(const double* re_im, gp_gate** out); /* 32 doubles */
GP_API gp_status gp_gate_matrix(const gp_gate* gate, double* re_im);       /* 32 doubles */
GP_API const char* gp_gate_name(const gp_gate* gate);
GP_API void gp_gate_free(gp_gate* gate);

/* Basis specs: bell, m1, m2, "beta_ab:a" (b = +sqrt(1/2 - a^2)),
 * "beta_ab:a,b", "beta_nl:t1,t2,t3", "pauli_conj:<x|y|z|h|s|t|haar:seed|JSON
 * 2x2 matrix>", "shifted:phase@gate" (the U-shifted basis), "haar:seed", or a
 * JSON document {"vectors": ...} inline or as a file path. */
GP_API gp_status gp_basis_parse(const char* spec, gp_basis** out);
GP_API gp_status gp_basis_from_vectors(const double* re_im, gp_basis** out); /* 32 doubles */
GP_API gp_status gp_basis_vectors(const gp_basis* basis, double* re_im);     /* 32 doubles */
GP_API const char* gp_basis_name(const gp_basis* basis);
GP_API void gp_basis_free(gp_basis* basis);

/* File-format documents (17 significant digits, complex as [re, im]). */
GP_API gp_status gp_gate_to_json(const gp_gate* gate, char** out);
GP_API gp_status gp_basis_to_json(const gp_basis* basis, char** out);

/* Reports. */
GP_API gp_status gp_kak(const gp_gate* gate, char** out);
GP_API gp_status gp_analyze(const gp_gate* gate, const gp_basis* basis, double tol, int verify,
                            int inputs, uint64_t seed, char** out);
GP_API gp_status gp_tables(char** out);
/* family: "beta_ab" (points values of a across [-1/sqrt2, 1/sqrt2]) or
 * "beta_nl" (points x points grid of (t1, t2) over [-pi, pi], t3 fixed).
 * Output is CSV in parameter order regardless of threads. */
GP_API gp_status gp_scan(const gp_gate* gate, const char* family, int points, double theta3,
                         int threads, double tol, char** out);
/* resource spec: bell, product, "cos:t" (cos t|00> + sin t|11>), "haar:seed"
 * or a JSON array of four [re, im] amplitudes. */
GP_API gp_status gp_state_teleport(const char* resource, const gp_gate* u_front,
                                   const gp_basis* basis, int inputs, uint64_t seed, double tol,
                                   char** out);
GP_API gp_status gp_simulate(const gp_gate* gate, const gp_basis* basis, int trials,
                             uint64_t seed, double tol, char** out);
/* psi spec: "haar:seed", "clifford" (U^dagger|00> with U = gate u1) or a JSON
 * array of four [re, im] amplitudes. */
GP_API gp_status gp_fourway(const gp_gate* gate, const gp_basis* basis, const char* psi,
                            double tol, char** out);
GP_API gp_status gp_validate_basis(const gp_basis* basis, double tol, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GATEPORT_GATEPORT_H */
