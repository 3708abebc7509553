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

#include <string>

#include "circuit.hpp"

namespace hwk {

// OpenQASM 2.0 serialization. Gates map to qelib1 names with identical
// semantics: x, cx, ccx, u3, cu3, ry, cry, and u1/cu1 for the Rz/CRz
// convention used here (diag(1, e^{i theta}), which is exactly qelib1's u1).
// Angles are printed with 17 significant digits so doubles round-trip
// exactly. A comment line records the working/ancilla split.
std::string emit_qasm(const Circuit& c);

// Reader for the emitted subset only; anything else is a ParseError.
Circuit read_qasm(const std::string& text);

}  // namespace hwk
