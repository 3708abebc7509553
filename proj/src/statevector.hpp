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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "state_spec.hpp"

namespace hwk {

// 2^26 complex doubles is about 1 GiB.
inline constexpr int kMaxSimQubits = 26;

// Dense statevector. Wire 0 (q_1) is the most significant bit of the basis
// index, so the label |x_1 x_2 ... a_{n-1} ... a_3> reads left to right as a
// binary number; the ancillas occupy the least significant m bits.
//
// A state is exclusively owned while gates are applied; reads are safe to
// share afterwards.
class StateVector {
 public:
  explicit StateVector(int qubits);  // |0...0>

  int qubits() const { return qubits_; }
  uint64_t size() const { return amps_.size(); }
  cdouble amplitude(uint64_t index) const { return amps_[index]; }
  const std::vector<cdouble>& amplitudes() const { return amps_; }

  // X/CNOT/CCX permute amplitudes by index swaps (bit-exact); rotation gates
  // update amplitude pairs through their 2x2 matrix on the control-selected
  // subspace.
  void apply(const Gate& g);

  double norm_sq() const;

  // Debug dump: array of [index, re, im] for entries with |amp| > threshold.
  std::string dump_json(double threshold = 0.0) const;

 private:
  int qubits_;
  std::vector<cdouble> amps_;

  uint64_t wire_mask(int32_t wire) const { return 1ull << (qubits_ - 1 - wire); }
};

// zero_state then fold apply over the gate list.
StateVector run(const Circuit& c);

struct VerifyReport {
  double fidelity;          // |<target x 0^m | state>|
  double max_amp_error;     // max |state - expected| over all basis states
  double ancilla_residual;  // probability mass with any ancilla bit set
  bool pass;                // fidelity >= 1-1e-9 and ancilla_residual <= 1e-12
};

inline constexpr double kFidelityThreshold = 1.0 - 1e-9;
inline constexpr double kAncillaResidualThreshold = 1e-12;

// Compares against the target spec tensored with |0^m>, m = max(0, n-3).
// The state must have exactly n+m qubits.
VerifyReport compare_to_spec(const StateVector& state, const StateSpec& spec);

}  // namespace hwk
