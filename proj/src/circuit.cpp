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

#include "circuit.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace hwk {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::U3: return "u3";
    case GateKind::CU3: return "cu3";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CRY: return "cry";
    case GateKind::CRZ: return "crz";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  for (int i = 0; i < kNumGateKinds; ++i) {
    GateKind kind = static_cast<GateKind>(i);
    if (name == gate_name(kind)) return kind;
  }
  fail(ErrorCode::ParseError, "unknown gate name '" + name + "'");
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::X:
    case GateKind::U3:
    case GateKind::RY:
    case GateKind::RZ: return 1;
    case GateKind::CNOT:
    case GateKind::CU3:
    case GateKind::CRY:
    case GateKind::CRZ: return 2;
    case GateKind::CCX: return 3;
  }
  return 0;
}

int Gate::controls() const { return arity() - 1; }

int Gate::angle_count() const {
  switch (kind) {
    case GateKind::U3:
    case GateKind::CU3: return 3;
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CRY:
    case GateKind::CRZ: return 1;
    default: return 0;
  }
}

bool Gate::touches(int32_t wire) const {
  for (int i = 0; i < arity(); ++i) {
    if (qubit[static_cast<size_t>(i)] == wire) return true;
  }
  return false;
}

void Circuit::append(const Gate& g) {
  const int nq = g.arity();
  for (int i = 0; i < nq; ++i) {
    int32_t w = g.qubit[static_cast<size_t>(i)];
    if (w < 0 || w >= layout.total()) {
      fail(ErrorCode::IndexOutOfRange,
           std::string(gate_name(g.kind)) + " wire " + std::to_string(w) + " outside [0, " +
               std::to_string(layout.total()) + ")");
    }
    for (int j = i + 1; j < nq; ++j) {
      if (w == g.qubit[static_cast<size_t>(j)]) {
        fail(ErrorCode::InvalidArgument, std::string(gate_name(g.kind)) + " wires must be distinct");
      }
    }
  }
  gates.push_back(g);
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
  double c = std::cos(theta / 2.0);
  double s = std::sin(theta / 2.0);
  return {{{cdouble{c, 0.0}, -std::polar(1.0, lambda) * s},
           {std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c}}};
}

Mat2 ry_matrix(double theta) {
  double c = std::cos(theta / 2.0);
  double s = std::sin(theta / 2.0);
  return {{{cdouble{c, 0.0}, cdouble{-s, 0.0}}, {cdouble{s, 0.0}, cdouble{c, 0.0}}}};
}

Mat2 rz_matrix(double theta) {
  return {{{cdouble{1.0, 0.0}, cdouble{0.0, 0.0}}, {cdouble{0.0, 0.0}, std::polar(1.0, theta)}}};
}

Mat2 gate_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::CCX:
      return {{{cdouble{0.0, 0.0}, cdouble{1.0, 0.0}}, {cdouble{1.0, 0.0}, cdouble{0.0, 0.0}}}};
    case GateKind::U3:
    case GateKind::CU3: return u3_matrix(g.angle[0], g.angle[1], g.angle[2]);
    case GateKind::RY:
    case GateKind::CRY: return ry_matrix(g.angle[0]);
    case GateKind::RZ:
    case GateKind::CRZ: return rz_matrix(g.angle[0]);
  }
  fail(ErrorCode::InvalidArgument, "unknown gate kind");
}

std::array<Gate, 3> decompose_u3(double theta, double phi, double lambda, int32_t target) {
  return {Gate::rz(lambda, target), Gate::ry(theta, target), Gate::rz(phi, target)};
}

Circuit decompose_rotations(const Circuit& c) {
  Circuit out(c.layout);
  out.gates.reserve(c.gates.size());
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::U3:
        for (const Gate& f : decompose_u3(g.angle[0], g.angle[1], g.angle[2], g.target())) out.append(f);
        break;
      case GateKind::CU3: {
        int32_t ctl = g.qubit[0];
        out.append(Gate::crz(ctl, g.angle[2], g.target()));
        out.append(Gate::cry(ctl, g.angle[0], g.target()));
        out.append(Gate::crz(ctl, g.angle[1], g.target()));
        break;
      }
      default: out.append(g);
    }
  }
  return out;
}

Circuit peephole_cancel_x(const Circuit& c) {
  std::vector<Gate> gates = c.gates;
  std::vector<char> removed(gates.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ptrdiff_t> pending(static_cast<size_t>(c.layout.total()), -1);
    for (size_t i = 0; i < gates.size(); ++i) {
      if (removed[i]) continue;
      const Gate& g = gates[i];
      if (g.kind == GateKind::X) {
        size_t w = static_cast<size_t>(g.target());
        if (pending[w] >= 0) {
          removed[static_cast<size_t>(pending[w])] = 1;
          removed[i] = 1;
          pending[w] = -1;
          changed = true;
        } else {
          pending[w] = static_cast<ptrdiff_t>(i);
        }
      } else {
        for (int a = 0; a < g.arity(); ++a) pending[static_cast<size_t>(g.qubit[static_cast<size_t>(a)])] = -1;
      }
    }
  }
  Circuit out(c.layout);
  for (size_t i = 0; i < gates.size(); ++i) {
    if (!removed[i]) out.gates.push_back(gates[i]);
  }
  return out;
}

std::array<uint64_t, kNumGateKinds> gate_counts(const Circuit& c) {
  std::array<uint64_t, kNumGateKinds> counts{};
  for (const Gate& g : c.gates) ++counts[static_cast<size_t>(g.kind)];
  return counts;
}

uint64_t total_gates(const Circuit& c) { return c.gates.size(); }

int depth(const Circuit& c) {
  std::vector<int> avail(static_cast<size_t>(c.layout.total()), 0);
  int d = 0;
  for (const Gate& g : c.gates) {
    int layer = 0;
    for (int i = 0; i < g.arity(); ++i) layer = std::max(layer, avail[static_cast<size_t>(g.qubit[static_cast<size_t>(i)])]);
    ++layer;
    for (int i = 0; i < g.arity(); ++i) avail[static_cast<size_t>(g.qubit[static_cast<size_t>(i)])] = layer;
    d = std::max(d, layer);
  }
  return d;
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json item;
    item["gate"] = gate_name(g.kind);
    nlohmann::json wires = nlohmann::json::array();
    for (int i = 0; i < g.arity(); ++i) wires.push_back(g.qubit[static_cast<size_t>(i)]);
    item["qubits"] = wires;
    if (g.angle_count() > 0) {
      nlohmann::json angles = nlohmann::json::array();
      for (int i = 0; i < g.angle_count(); ++i) angles.push_back(g.angle[static_cast<size_t>(i)]);
      item["angles"] = angles;
    }
    gates.push_back(item);
  }
  nlohmann::json doc;
  doc["n"] = c.layout.n;
  doc["ancillas"] = c.layout.m;
  doc["qubits"] = c.layout.total();
  doc["gates"] = gates;
  return doc.dump(2) + "\n";
}

}  // namespace hwk
