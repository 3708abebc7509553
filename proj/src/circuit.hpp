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

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hwk {

using cdouble = std::complex<double>;
using Mat2 = std::array<std::array<cdouble, 2>, 2>;

// Gate conventions (single-qubit matrices act on the target wire):
//
//   U3(theta, phi, lambda) = [[cos(theta/2),            -e^{i lambda} sin(theta/2)],
//                             [e^{i phi} sin(theta/2),   e^{i(phi+lambda)} cos(theta/2)]]
//   Ry(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
//   Rz(theta) = diag(1, e^{i theta})
//
// Note the Rz convention: no half-angle global phase. Under it
// U3(theta, phi, lambda) == Rz(phi) * Ry(theta) * Rz(lambda) holds exactly,
// with no residual phase, and the controlled variants decompose the same way.
// Controlled gates act as the identity on the control-0 subspace.

enum class GateKind : uint8_t { X, CNOT, CCX, U3, CU3, RY, RZ, CRY, CRZ };

inline constexpr int kNumGateKinds = 9;

const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);  // ParseError on unknown names

struct Gate {
  GateKind kind;
  std::array<int32_t, 3> qubit{-1, -1, -1};  // controls first, target last
  std::array<double, 3> angle{0.0, 0.0, 0.0};

  static Gate x(int32_t t) { return {GateKind::X, {t, -1, -1}, {}}; }
  static Gate cnot(int32_t c, int32_t t) { return {GateKind::CNOT, {c, t, -1}, {}}; }
  static Gate ccx(int32_t c1, int32_t c2, int32_t t) { return {GateKind::CCX, {c1, c2, t}, {}}; }
  static Gate u3(double theta, double phi, double lambda, int32_t t) {
    return {GateKind::U3, {t, -1, -1}, {theta, phi, lambda}};
  }
  static Gate cu3(int32_t c, double theta, double phi, double lambda, int32_t t) {
    return {GateKind::CU3, {c, t, -1}, {theta, phi, lambda}};
  }
  static Gate ry(double theta, int32_t t) { return {GateKind::RY, {t, -1, -1}, {theta, 0.0, 0.0}}; }
  static Gate rz(double theta, int32_t t) { return {GateKind::RZ, {t, -1, -1}, {theta, 0.0, 0.0}}; }
  static Gate cry(int32_t c, double theta, int32_t t) { return {GateKind::CRY, {c, t, -1}, {theta, 0.0, 0.0}}; }
  static Gate crz(int32_t c, double theta, int32_t t) { return {GateKind::CRZ, {c, t, -1}, {theta, 0.0, 0.0}}; }

  int arity() const;       // number of wires
  int controls() const;    // number of control wires
  int angle_count() const;
  int32_t target() const { return qubit[static_cast<size_t>(arity() - 1)]; }
  bool touches(int32_t wire) const;

  bool operator==(const Gate& other) const = default;
};

// Wire assignment used throughout: the working qubits q_1..q_n (q_1 holds the
// leftmost bit of a string) map to flat indices 0..n-1; the ancillas
// a_3..a_{n-1} follow in descending label order, a_j -> n + (n-1-j).
struct QubitLayout {
  int n;
  int m;

  explicit QubitLayout(int n_) : n(n_), m(n_ > 3 ? n_ - 3 : 0) {}
  QubitLayout(int n_, int m_) : n(n_), m(m_) {}

  int q(int i) const { return i - 1; }
  int a(int j) const { return n + (n - 1 - j); }
  int total() const { return n + m; }
};

struct Circuit {
  QubitLayout layout;
  std::vector<Gate> gates;

  explicit Circuit(QubitLayout lay) : layout(lay) {}

  // Validates wire indices: in range and pairwise distinct.
  void append(const Gate& g);
};

Mat2 u3_matrix(double theta, double phi, double lambda);
Mat2 ry_matrix(double theta);
Mat2 rz_matrix(double theta);

// Local action on the target wire (X for the NOT family, the rotation matrix
// otherwise); controls select the subspace the matrix acts on.
Mat2 gate_matrix(const Gate& g);

// Factors applied in the order Rz(lambda), Ry(theta), Rz(phi); their matrix
// product equals u3_matrix(theta, phi, lambda) exactly.
std::array<Gate, 3> decompose_u3(double theta, double phi, double lambda, int32_t target);

// Rewrites every U3 into Rz/Ry/Rz and every CU3 into CRz/CRy/CRz.
Circuit decompose_rotations(const Circuit& c);

// Removes pairs of X gates on the same wire with no intervening gate touching
// that wire, repeatedly until none remain. Semantics-preserving and
// idempotent.
Circuit peephole_cancel_x(const Circuit& c);

std::array<uint64_t, kNumGateKinds> gate_counts(const Circuit& c);
uint64_t total_gates(const Circuit& c);

// ASAP layering; a multi-qubit gate occupies all its wires for one layer.
int depth(const Circuit& c);

std::string circuit_to_json(const Circuit& c);

}  // namespace hwk
