// Copyright 2026 The hwkc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hwk/hwk.h"

#include <cstdio>
#include <cstring>
#include <string>
#include <utility>

#include "circuit.hpp"
#include "errors.hpp"
#include "hamming_tree.hpp"
#include "qasm.hpp"
#include "state_spec.hpp"
#include "statevector.hpp"
#include "synthesizer.hpp"

struct hwk_spec {
  hwk::StateSpec impl;
};

struct hwk_circuit {
  hwk::Circuit impl;
};

struct hwk_tree {
  hwk::HammingTree impl;
};

namespace {

thread_local std::string g_last_error;

hwk_status map_code(hwk::ErrorCode code) {
  using hwk::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return HWK_ERROR_INVALID_ARGUMENT;
    case ErrorCode::WrongWeight: return HWK_ERROR_WRONG_WEIGHT;
    case ErrorCode::WrongLength: return HWK_ERROR_WRONG_LENGTH;
    case ErrorCode::NotNormalized: return HWK_ERROR_NOT_NORMALIZED;
    case ErrorCode::DuplicateKey: return HWK_ERROR_DUPLICATE_KEY;
    case ErrorCode::InvalidK: return HWK_ERROR_INVALID_K;
    case ErrorCode::DegenerateDraw: return HWK_ERROR_DEGENERATE_DRAW;
    case ErrorCode::TooManyQubits: return HWK_ERROR_TOO_MANY_QUBITS;
    case ErrorCode::IndexOutOfRange: return HWK_ERROR_INDEX_OUT_OF_RANGE;
    case ErrorCode::SizeMismatch: return HWK_ERROR_SIZE_MISMATCH;
    case ErrorCode::ParseError: return HWK_ERROR_PARSE;
    case ErrorCode::IoError: return HWK_ERROR_IO;
  }
  return HWK_ERROR_INVALID_ARGUMENT;
}

template <typename F>
hwk_status guarded(F&& body) noexcept {
  try {
    body();
    return HWK_OK;
  } catch (const hwk::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HWK_ERROR_INVALID_ARGUMENT;
  }
}

hwk_status invalid(const char* msg) noexcept {
  g_last_error = msg;
  return HWK_ERROR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hwk::SynthOptions options_from(uint32_t flags) {
  hwk::SynthOptions opts;
  opts.peephole = (flags & HWK_SYNTH_PEEPHOLE) != 0;
  opts.prune_zero = (flags & HWK_SYNTH_PRUNE_ZERO) != 0;
  opts.decompose_u3 = (flags & HWK_SYNTH_DECOMPOSE_U3) != 0;
  return opts;
}

hwk_verify_report to_c(const hwk::VerifyReport& r) {
  return {r.fidelity, r.max_amp_error, r.ancilla_residual, r.pass ? 1 : 0};
}

}  // namespace

extern "C" {

const char* hwk_version(void) { return "0.1.0"; }

const char* hwk_last_error(void) { return g_last_error.c_str(); }

const char* hwk_status_name(hwk_status status) {
  switch (status) {
    case HWK_OK: return "HWK_OK";
    case HWK_ERROR_INVALID_ARGUMENT: return "HWK_ERROR_INVALID_ARGUMENT";
    case HWK_ERROR_WRONG_WEIGHT: return "HWK_ERROR_WRONG_WEIGHT";
    case HWK_ERROR_WRONG_LENGTH: return "HWK_ERROR_WRONG_LENGTH";
    case HWK_ERROR_NOT_NORMALIZED: return "HWK_ERROR_NOT_NORMALIZED";
    case HWK_ERROR_DUPLICATE_KEY: return "HWK_ERROR_DUPLICATE_KEY";
    case HWK_ERROR_INVALID_K: return "HWK_ERROR_INVALID_K";
    case HWK_ERROR_DEGENERATE_DRAW: return "HWK_ERROR_DEGENERATE_DRAW";
    case HWK_ERROR_TOO_MANY_QUBITS: return "HWK_ERROR_TOO_MANY_QUBITS";
    case HWK_ERROR_INDEX_OUT_OF_RANGE: return "HWK_ERROR_INDEX_OUT_OF_RANGE";
    case HWK_ERROR_SIZE_MISMATCH: return "HWK_ERROR_SIZE_MISMATCH";
    case HWK_ERROR_PARSE: return "HWK_ERROR_PARSE";
    case HWK_ERROR_IO: return "HWK_ERROR_IO";
  }
  return "HWK_ERROR_UNKNOWN";
}

void hwk_string_free(char* s) { delete[] s; }

uint64_t hwk_binomial(int32_t n, int32_t k) {
  uint64_t value = 0;
  hwk_status st = guarded([&] { value = hwk::binomial(n, k); });
  return st == HWK_OK ? value : 0;
}

/* --- specs --------------------------------------------------------------- */

hwk_status hwk_spec_dicke(int32_t n, int32_t k, hwk_spec** out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = new hwk_spec{hwk::StateSpec::dicke(n, k)}; });
}

hwk_status hwk_spec_random(int32_t n, int32_t k, uint64_t seed, double sparsity, hwk_spec** out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = new hwk_spec{hwk::StateSpec::random(n, k, seed, sparsity)}; });
}

hwk_status hwk_spec_from_json(const char* text, uint32_t flags, hwk_spec** out) {
  if (!out || !text) return invalid("text and out must not be null");
  return guarded(
      [&] { *out = new hwk_spec{hwk::StateSpec::from_json(text, (flags & HWK_SPEC_RENORMALIZE) != 0)}; });
}

hwk_status hwk_spec_read(const char* path, uint32_t flags, hwk_spec** out) {
  if (!out || !path) return invalid("path and out must not be null");
  return guarded(
      [&] { *out = new hwk_spec{hwk::StateSpec::load(path, (flags & HWK_SPEC_RENORMALIZE) != 0)}; });
}

hwk_status hwk_spec_to_json(const hwk_spec* spec, char** out) {
  if (!spec || !out) return invalid("spec and out must not be null");
  return guarded([&] { *out = copy_string(spec->impl.to_json()); });
}

hwk_status hwk_spec_write(const hwk_spec* spec, const char* path) {
  if (!spec || !path) return invalid("spec and path must not be null");
  return guarded([&] { spec->impl.save(path); });
}

int32_t hwk_spec_n(const hwk_spec* spec) { return spec ? spec->impl.n() : -1; }

int32_t hwk_spec_k(const hwk_spec* spec) { return spec ? spec->impl.k() : -1; }

uint64_t hwk_spec_support(const hwk_spec* spec) { return spec ? spec->impl.support_size() : 0; }

void hwk_spec_free(hwk_spec* spec) { delete spec; }

/* --- synthesis ------------------------------------------------------------ */

hwk_status hwk_synthesize(const hwk_spec* spec, uint32_t flags, hwk_circuit** out) {
  if (!spec || !out) return invalid("spec and out must not be null");
  return guarded([&] { *out = new hwk_circuit{hwk::synthesize(spec->impl, options_from(flags))}; });
}

hwk_status hwk_gate_count_certificate(const hwk_spec* spec, hwk_count_report* out) {
  if (!spec || !out) return invalid("spec and out must not be null");
  return guarded([&] {
    hwk::GateCountCertificate cert = hwk::gate_count_certificate(spec->impl);
    *out = {cert.internal_nodes, cert.total_gates, cert.bound, cert.ok ? 1 : 0};
  });
}

/* --- circuits -------------------------------------------------------------- */

int32_t hwk_circuit_num_qubits(const hwk_circuit* c) { return c ? c->impl.layout.total() : -1; }

int32_t hwk_circuit_num_ancillas(const hwk_circuit* c) { return c ? c->impl.layout.m : -1; }

uint64_t hwk_circuit_num_gates(const hwk_circuit* c) { return c ? c->impl.gates.size() : 0; }

uint64_t hwk_circuit_depth(const hwk_circuit* c) {
  return c ? static_cast<uint64_t>(hwk::depth(c->impl)) : 0;
}

hwk_status hwk_circuit_count_kind(const hwk_circuit* c, const char* name, uint64_t* out) {
  if (!c || !name || !out) return invalid("circuit, name and out must not be null");
  return guarded([&] {
    hwk::GateKind kind = hwk::gate_kind_from_name(name);
    *out = hwk::gate_counts(c->impl)[static_cast<size_t>(kind)];
  });
}

hwk_status hwk_circuit_gate(const hwk_circuit* c, uint64_t index, hwk_gate_info* out) {
  if (!c || !out) return invalid("circuit and out must not be null");
  return guarded([&] {
    if (index >= c->impl.gates.size()) hwk::fail(hwk::ErrorCode::IndexOutOfRange, "gate index out of range");
    const hwk::Gate& g = c->impl.gates[index];
    hwk_gate_info info{};
    std::snprintf(info.name, sizeof(info.name), "%s", hwk::gate_name(g.kind));
    info.num_qubits = g.arity();
    for (int i = 0; i < info.num_qubits; ++i) info.qubits[i] = g.qubit[static_cast<size_t>(i)];
    info.num_angles = g.angle_count();
    for (int i = 0; i < info.num_angles; ++i) info.angles[i] = g.angle[static_cast<size_t>(i)];
    *out = info;
  });
}

hwk_status hwk_circuit_to_qasm(const hwk_circuit* c, char** out) {
  if (!c || !out) return invalid("circuit and out must not be null");
  return guarded([&] { *out = copy_string(hwk::emit_qasm(c->impl)); });
}

hwk_status hwk_circuit_to_json(const hwk_circuit* c, char** out) {
  if (!c || !out) return invalid("circuit and out must not be null");
  return guarded([&] { *out = copy_string(hwk::circuit_to_json(c->impl)); });
}

hwk_status hwk_circuit_from_qasm(const char* text, hwk_circuit** out) {
  if (!text || !out) return invalid("text and out must not be null");
  return guarded([&] { *out = new hwk_circuit{hwk::read_qasm(text)}; });
}

hwk_status hwk_circuit_nudge_first_rotation(hwk_circuit* c, double delta) {
  if (!c) return invalid("circuit must not be null");
  return guarded([&] {
    for (hwk::Gate& g : c->impl.gates) {
      if (g.angle_count() > 0) {
        g.angle[0] += delta;
        return;
      }
    }
    hwk::fail(hwk::ErrorCode::InvalidArgument, "circuit has no rotation gates");
  });
}

void hwk_circuit_free(hwk_circuit* c) { delete c; }

/* --- trees ----------------------------------------------------------------- */

hwk_status hwk_tree_build(int32_t n, int32_t k, hwk_tree** out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = new hwk_tree{hwk::HammingTree(n, k)}; });
}

hwk_status hwk_tree_counts(const hwk_tree* t, uint64_t* leaves, uint64_t* internal_nodes) {
  if (!t || !leaves || !internal_nodes) return invalid("tree and outputs must not be null");
  *leaves = t->impl.leaf_count();
  *internal_nodes = t->impl.internal_count();
  return HWK_OK;
}

hwk_status hwk_tree_to_dot(const hwk_tree* t, char** out) {
  if (!t || !out) return invalid("tree and out must not be null");
  return guarded([&] { *out = copy_string(t->impl.to_dot()); });
}

void hwk_tree_free(hwk_tree* t) { delete t; }

/* --- verification ----------------------------------------------------------- */

hwk_status hwk_verify(const hwk_spec* spec, uint32_t flags, hwk_verify_report* out) {
  if (!spec || !out) return invalid("spec and out must not be null");
  return guarded([&] {
    hwk::Circuit circuit = hwk::synthesize(spec->impl, options_from(flags));
    hwk::StateVector state = hwk::run(circuit);
    *out = to_c(hwk::compare_to_spec(state, spec->impl));
  });
}

hwk_status hwk_verify_circuit(const hwk_circuit* c, const hwk_spec* spec, hwk_verify_report* out) {
  if (!c || !spec || !out) return invalid("circuit, spec and out must not be null");
  return guarded([&] {
    hwk::StateVector state = hwk::run(c->impl);
    *out = to_c(hwk::compare_to_spec(state, spec->impl));
  });
}

}  // extern "C"
