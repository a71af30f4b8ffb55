/* SPDX-License-Identifier: Apache-2.0
 *
 * C API for the qcopt quantum circuit optimizer. All functions are
 * thread-safe as long as distinct threads operate on distinct handles.
 * Functions that can fail return a qcopt_status and write a human-readable
 * message into the caller-supplied error buffer (always NUL-terminated when
 * errbuf is non-NULL and errlen > 0).
 */
#ifndef QCOPT_H
#define QCOPT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qcopt_circuit qcopt_circuit; /* opaque */

typedef enum qcopt_status {
    QCOPT_OK = 0,
    QCOPT_ERR_PARSE = 1,       /* malformed input text */
    QCOPT_ERR_UNSUPPORTED = 2, /* outside the supported OpenQASM subset */
    QCOPT_ERR_NONUNITARY = 3,  /* measure/reset reached a unitary-only entry */
    QCOPT_ERR_INVALID = 4,     /* bad argument (schedule, arch spec, perm, ...) */
    QCOPT_ERR_TOO_LARGE = 5,   /* dense denotation guard exceeded */
    QCOPT_ERR_IO = 6,          /* file could not be read or written */
    QCOPT_ERR_INTERNAL = 7
} qcopt_status;

typedef struct qcopt_gate_counts {
    uint64_t total;
    uint64_t h;
    uint64_t x;
    uint64_t rz;
    uint64_t cnot;
    uint64_t t_count;
    uint64_t other_rz;
} qcopt_gate_counts;

typedef enum qcopt_equiv_kind {
    QCOPT_EQUIV_EQUAL = 0,
    QCOPT_EQUIV_UP_TO_PHASE = 1,
    QCOPT_EQUIV_NOT_EQUIVALENT = 2
} qcopt_equiv_kind;

typedef struct qcopt_equiv_verdict {
    int kind;              /* qcopt_equiv_kind */
    double theta;          /* global phase, for QCOPT_EQUIV_UP_TO_PHASE */
    int has_witness;       /* 1 when witness holds a deviating basis state */
    uint64_t witness;
    double max_deviation;
} qcopt_equiv_verdict;

const char* qcopt_version(void);

/* --- circuit lifecycle -------------------------------------------------- */

/* Parses OpenQASM 2.0 and lowers it onto the {H, X, Rz, CNOT} gate set. */
qcopt_status qcopt_parse_file(const char* path, qcopt_circuit** out,
                              char* errbuf, size_t errlen);
qcopt_status qcopt_parse_string(const char* text, qcopt_circuit** out,
                                char* errbuf, size_t errlen);
void qcopt_circuit_free(qcopt_circuit* c);

unsigned qcopt_circuit_dim(const qcopt_circuit* c);
uint64_t qcopt_circuit_num_gates(const qcopt_circuit* c);
int qcopt_circuit_well_typed(const qcopt_circuit* c);
void qcopt_count_gates(const qcopt_circuit* c, qcopt_gate_counts* out);

qcopt_status qcopt_emit_file(const qcopt_circuit* c, const char* path,
                             char* errbuf, size_t errlen);
/* Caller frees the returned string with qcopt_string_free. */
qcopt_status qcopt_emit_string(const qcopt_circuit* c, char** out,
                               char* errbuf, size_t errlen);
void qcopt_string_free(char* s);

/* --- transformations ---------------------------------------------------- */

/* schedule: digit string over {0..4} (see CLI docs); NULL for the default. */
qcopt_status qcopt_optimize(const qcopt_circuit* c, const char* schedule,
                            qcopt_circuit** out, char* errbuf, size_t errlen);

/* arch_spec: "tenerife" | "lnn:N" | "lnn_ring:N" | "grid:RxC". On success,
 * *out respects the architecture constraints. layout_in/layout_out, when
 * non-NULL, receive the initial and final logical->physical correspondences
 * (arrays of length qcopt_circuit_dim(c)). */
qcopt_status qcopt_map(const qcopt_circuit* c, const char* arch_spec,
                       qcopt_circuit** out, unsigned* layout_in,
                       unsigned* layout_out, char* errbuf, size_t errlen);

int qcopt_respects_constraints(const qcopt_circuit* c, const char* arch_spec);

/* --- validation ---------------------------------------------------------- */

/* mode: "matrix" or "phasepoly". */
qcopt_status qcopt_check_equiv(const qcopt_circuit* a, const qcopt_circuit* b,
                               const char* mode, double tol,
                               qcopt_equiv_verdict* out, char* errbuf,
                               size_t errlen);

/* Checks [[b]] = P_out [[a]] P_in^dagger within tol for the given
 * correspondences (arrays of length dim); result in *out (0/1). */
qcopt_status qcopt_check_equiv_perm(const qcopt_circuit* a, const qcopt_circuit* b,
                                    const unsigned* perm_in, const unsigned* perm_out,
                                    double tol, int* out, char* errbuf,
                                    size_t errlen);

#ifdef __cplusplus
}
#endif

#endif /* QCOPT_H */
