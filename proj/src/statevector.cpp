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

#include "statevector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace hwk {

StateVector::StateVector(int qubits) : qubits_(qubits) {
  if (qubits < 1 || qubits > kMaxSimQubits) {
    fail(ErrorCode::TooManyQubits, "qubit count must be in [1, " + std::to_string(kMaxSimQubits) + "]");
  }
  amps_.assign(1ull << qubits, cdouble{0.0, 0.0});
  amps_[0] = cdouble{1.0, 0.0};
}

void StateVector::apply(const Gate& g) {
  uint64_t control_mask = 0;
  for (int i = 0; i < g.controls(); ++i) {
    int32_t w = g.qubit[static_cast<size_t>(i)];
    if (w < 0 || w >= qubits_) fail(ErrorCode::IndexOutOfRange, "gate wire outside the register");
    control_mask |= wire_mask(w);
  }
  int32_t t = g.target();
  if (t < 0 || t >= qubits_) fail(ErrorCode::IndexOutOfRange, "gate wire outside the register");
  const uint64_t target_mask = wire_mask(t);
  const uint64_t count = size();

  const bool permutation = g.kind == GateKind::X || g.kind == GateKind::CNOT || g.kind == GateKind::CCX;
  if (permutation) {
    for (uint64_t i = 0; i < count; ++i) {
      if ((i & control_mask) == control_mask && !(i & target_mask)) {
        std::swap(amps_[i], amps_[i | target_mask]);
      }
    }
    return;
  }

  const Mat2 m = gate_matrix(g);
  for (uint64_t i = 0; i < count; ++i) {
    if ((i & control_mask) == control_mask && !(i & target_mask)) {
      cdouble a0 = amps_[i];
      cdouble a1 = amps_[i | target_mask];
      amps_[i] = m[0][0] * a0 + m[0][1] * a1;
      amps_[i | target_mask] = m[1][0] * a0 + m[1][1] * a1;
    }
  }
}

double StateVector::norm_sq() const {
  double sum = 0.0;
  for (const cdouble& a : amps_) sum += std::norm(a);
  return sum;
}

std::string StateVector::dump_json(double threshold) const {
  nlohmann::json entries = nlohmann::json::array();
  for (uint64_t i = 0; i < size(); ++i) {
    if (std::abs(amps_[i]) > threshold) {
      entries.push_back(nlohmann::json::array({i, amps_[i].real(), amps_[i].imag()}));
    }
  }
  return entries.dump() + "\n";
}

StateVector run(const Circuit& c) {
  StateVector state(c.layout.total());
  for (const Gate& g : c.gates) state.apply(g);
  return state;
}

VerifyReport compare_to_spec(const StateVector& state, const StateSpec& spec) {
  const int n = spec.n();
  const int m = n > 3 ? n - 3 : 0;
  if (state.qubits() != n + m) {
    fail(ErrorCode::SizeMismatch, "state has " + std::to_string(state.qubits()) + " qubits, expected " +
                                      std::to_string(n + m));
  }
  const uint64_t ancilla_mask = m == 0 ? 0 : ((1ull << m) - 1);

  cdouble overlap{0.0, 0.0};
  for (const auto& [bits, amp] : spec.amplitudes()) {
    overlap += std::conj(amp) * state.amplitude(bits << m);
  }

  double max_err = 0.0;
  double residual = 0.0;
  for (uint64_t i = 0; i < state.size(); ++i) {
    cdouble actual = state.amplitude(i);
    if (i & ancilla_mask) {
      residual += std::norm(actual);
      max_err = std::max(max_err, std::abs(actual));
    } else {
      cdouble expected = spec.amplitude(i >> m);
      max_err = std::max(max_err, std::abs(actual - expected));
    }
  }

  VerifyReport report;
  report.fidelity = std::abs(overlap);
  report.max_amp_error = max_err;
  report.ancilla_residual = residual;
  report.pass = report.fidelity >= kFidelityThreshold && report.ancilla_residual <= kAncillaResidualThreshold;
  return report;
}

}  // namespace hwk
