/* Copyright 2026 The hwkc developers
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

/* C API for the hwk library: synthesis of circuits preparing n-qubit states
 * supported on the basis strings of Hamming weight exactly k, plus the dense
 * statevector oracle that verifies every emitted circuit.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions returning hwk_status report failures through the returned code;
 * hwk_last_error() gives a human-readable message for the most recent
 * failure on the calling thread. Output handles are written only on HWK_OK.
 *
 * Conventions, fixed project-wide:
 *   - bitstrings read left to right, the first character is q_1;
 *   - wires 0..n-1 are the working qubits q_1..q_n, wires n..n+m-1 are the
 *     ancillas a_{n-1}..a_3, with m = max(0, n-3);
 *   - Rz(theta) = diag(1, e^{i theta}) (no half-angle phase), so
 *     U3(theta,phi,lambda) = Rz(phi) Ry(theta) Rz(lambda) holds exactly.
 */

#ifndef HWK_H
#define HWK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef HWK_API
#if defined(_WIN32) || defined(__CYGWIN__)
#define HWK_API __declspec(dllexport)
#else
#define HWK_API __attribute__((visibility("default")))
#endif
#endif

typedef enum hwk_status {
  HWK_OK = 0,
  HWK_ERROR_INVALID_ARGUMENT = 1,
  HWK_ERROR_WRONG_WEIGHT = 2,
  HWK_ERROR_WRONG_LENGTH = 3,
  HWK_ERROR_NOT_NORMALIZED = 4,
  HWK_ERROR_DUPLICATE_KEY = 5,
  HWK_ERROR_INVALID_K = 6,
  HWK_ERROR_DEGENERATE_DRAW = 7,
  HWK_ERROR_TOO_MANY_QUBITS = 8,
  HWK_ERROR_INDEX_OUT_OF_RANGE = 9,
  HWK_ERROR_SIZE_MISMATCH = 10,
  HWK_ERROR_PARSE = 11,
  HWK_ERROR_IO = 12
} hwk_status;

/* Synthesis flags (bitwise or). */
enum {
  HWK_SYNTH_PEEPHOLE = 1u << 0,     /* cancel adjacent X pairs */
  HWK_SYNTH_PRUNE_ZERO = 1u << 1,   /* skip zero-weight subtrees */
  HWK_SYNTH_DECOMPOSE_U3 = 1u << 2  /* rewrite U3/CU3 into Rz/Ry rotations */
};

/* Spec loading flags. */
enum { HWK_SPEC_RENORMALIZE = 1u << 0 };

/* Largest register the simulator accepts (n plus ancillas). */
enum { HWK_MAX_SIM_QUBITS = 26 };

typedef struct hwk_spec hwk_spec;
typedef struct hwk_circuit hwk_circuit;
typedef struct hwk_tree hwk_tree;

typedef struct hwk_verify_report {
  double fidelity;         /* |<target x 0^m | state>| */
  double max_amp_error;    /* max |amplitude - expected| over all basis states */
  double ancilla_residual; /* probability mass with any ancilla bit set */
  int32_t pass;            /* fidelity >= 1-1e-9 and ancilla_residual <= 1e-12 */
} hwk_verify_report;

typedef struct hwk_count_report {
  uint64_t internal_nodes; /* C(n,k) - 1 */
  uint64_t total_gates;    /* default synthesis, no optimization passes */
  uint64_t bound;          /* 10*(C(n,k)-1) + k */
  int32_t ok;              /* total_gates <= bound */
} hwk_count_report;

typedef struct hwk_gate_info {
  char name[8];      /* x, cx, ccx, u3, cu3, ry, rz, cry, crz */
  int32_t qubits[3]; /* controls first, target last */
  int32_t num_qubits;
  double angles[3]; /* (theta, phi, lambda) for u3/cu3, angle in [0] otherwise */
  int32_t num_angles;
} hwk_gate_info;

HWK_API const char* hwk_version(void);

/* Message for the most recent failure on the calling thread. */
HWK_API const char* hwk_last_error(void);
HWK_API const char* hwk_status_name(hwk_status status);

/* Frees strings returned through char** out-parameters. */
HWK_API void hwk_string_free(char* s);

/* Exact binomial coefficient; returns 0 and sets the error message when the
 * arguments are invalid or the value does not fit in 64 bits. */
HWK_API uint64_t hwk_binomial(int32_t n, int32_t k);

/* --- state specs ------------------------------------------------------- */

HWK_API hwk_status hwk_spec_dicke(int32_t n, int32_t k, hwk_spec** out);

/* Seeded random spec with independent real/imaginary draws, normalized.
 * sparsity in [0,1) zeroes floor(sparsity * C(n,k)) entries first.
 * Identical inputs produce identical specs. */
HWK_API hwk_status hwk_spec_random(int32_t n, int32_t k, uint64_t seed, double sparsity, hwk_spec** out);

/* JSON form: {"n": int, "k": int, "amplitudes": {"<bitstring>": [re, im]}}. */
HWK_API hwk_status hwk_spec_from_json(const char* text, uint32_t flags, hwk_spec** out);
HWK_API hwk_status hwk_spec_read(const char* path, uint32_t flags, hwk_spec** out);
HWK_API hwk_status hwk_spec_to_json(const hwk_spec* spec, char** out);
HWK_API hwk_status hwk_spec_write(const hwk_spec* spec, const char* path);

HWK_API int32_t hwk_spec_n(const hwk_spec* spec);
HWK_API int32_t hwk_spec_k(const hwk_spec* spec);
HWK_API uint64_t hwk_spec_support(const hwk_spec* spec);
HWK_API void hwk_spec_free(hwk_spec* spec);

/* --- synthesis ---------------------------------------------------------- */

HWK_API hwk_status hwk_synthesize(const hwk_spec* spec, uint32_t flags, hwk_circuit** out);
HWK_API hwk_status hwk_gate_count_certificate(const hwk_spec* spec, hwk_count_report* out);

/* --- circuits ----------------------------------------------------------- */

HWK_API int32_t hwk_circuit_num_qubits(const hwk_circuit* c);
HWK_API int32_t hwk_circuit_num_ancillas(const hwk_circuit* c);
HWK_API uint64_t hwk_circuit_num_gates(const hwk_circuit* c);
HWK_API uint64_t hwk_circuit_depth(const hwk_circuit* c);
HWK_API hwk_status hwk_circuit_count_kind(const hwk_circuit* c, const char* name, uint64_t* out);
HWK_API hwk_status hwk_circuit_gate(const hwk_circuit* c, uint64_t index, hwk_gate_info* out);

HWK_API hwk_status hwk_circuit_to_qasm(const hwk_circuit* c, char** out);
HWK_API hwk_status hwk_circuit_to_json(const hwk_circuit* c, char** out);
HWK_API hwk_status hwk_circuit_from_qasm(const char* text, hwk_circuit** out);

/* Adds delta to the first angle of the first rotation gate. Robustness aid:
 * a verified negative control for hwk_verify_circuit. */
HWK_API hwk_status hwk_circuit_nudge_first_rotation(hwk_circuit* c, double delta);

HWK_API void hwk_circuit_free(hwk_circuit* c);

/* --- Hamming trees ------------------------------------------------------ */

HWK_API hwk_status hwk_tree_build(int32_t n, int32_t k, hwk_tree** out);
HWK_API hwk_status hwk_tree_counts(const hwk_tree* t, uint64_t* leaves, uint64_t* internal_nodes);
HWK_API hwk_status hwk_tree_to_dot(const hwk_tree* t, char** out);
HWK_API void hwk_tree_free(hwk_tree* t);

/* --- verification ------------------------------------------------------- */

/* Synthesizes with the given flags, simulates from |0...0>, and compares
 * against the spec. Fails with HWK_ERROR_TOO_MANY_QUBITS when n plus the
 * ancilla count exceeds HWK_MAX_SIM_QUBITS. */
HWK_API hwk_status hwk_verify(const hwk_spec* spec, uint32_t flags, hwk_verify_report* out);

/* Simulates an existing circuit and compares against the spec. */
HWK_API hwk_status hwk_verify_circuit(const hwk_circuit* c, const hwk_spec* spec, hwk_verify_report* out);

#ifdef __cplusplus
}
#endif

#endif /* HWK_H */
