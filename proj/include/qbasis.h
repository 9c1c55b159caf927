/* Copyright (c) 2026, the authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef QBASIS_H
#define QBASIS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible function. */
#define QB_OK 0
#define QB_ERR_INVALID_INPUT 2
#define QB_ERR_IMPOSSIBLE_OUTCOME 3
#define QB_ERR_INTERNAL 4

typedef struct qb_matrix qb_matrix;
typedef struct qb_circuit qb_circuit;

/* Message for the most recent error on this thread; empty string if none.
 * The pointer stays valid until the next failing call on the thread. */
const char* qb_last_error(void);

/* Frees a string returned through an out parameter. */
void qb_string_free(char* s);

/* Matrix JSON: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major. */
int qb_matrix_parse(const char* json, qb_matrix** out);
int qb_matrix_dims(const qb_matrix* m, size_t* rows, size_t* cols);
void qb_matrix_free(qb_matrix* m);

int qb_circuit_parse(const char* json, qb_circuit** out);
int qb_circuit_to_json(const qb_circuit* c, char** out_json);
void qb_circuit_free(qb_circuit* c);

/* Phased-Givens elimination schedule of a unitary: JSON with the step
 * list (rows, angles, layer tags), the trailing phase, and the
 * reconstruction residual. */
int qb_qr(const qb_matrix* m, double tolerance, char** out_json);

/* Singular value decomposition m = L diag(sigma) R as JSON. */
int qb_svd(const qb_matrix* m, char** out_json);

/* Basis-rotation circuit for a unitary. Returns the circuit and a
 * synthesis report JSON. */
int qb_synth_unitary(const qb_matrix* m, double tolerance,
                     qb_circuit** out_circuit, char** out_report_json);

/* Block-encoded circuit for a contraction, with singular values rounded
 * by epsilon. */
int qb_synth_nonunitary(const qb_matrix* m, double epsilon, double tolerance,
                        qb_circuit** out_circuit, char** out_report_json);

/* Overlap of two states (state JSON or preparation-circuit JSON) whose
 * orbital bases are related by the given overlap matrix. method is one
 * of "swap", "alt-swap", "hadamard". shots = 0 means exact only. */
int qb_overlap(const char* psi_json, const char* phi_json,
               const qb_matrix* overlap_matrix, const char* method,
               double epsilon, double tolerance, uint64_t shots,
               uint64_t seed, char** out_json);

/* Oracle-equivalence verification suites. all_pass receives 1 or 0.
 * inject_fault != 0 perturbs one synthesized gate to prove the harness
 * can fail. */
int qb_verify(size_t n, size_t trials, uint64_t seed, int inject_fault,
              char** out_json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* QBASIS_H */
