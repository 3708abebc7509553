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

#include "qasm.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace hwk {

namespace {

std::string fmt_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

const char* qasm_name(GateKind kind) {
  // The paper-convention Rz is exactly qelib1's u1 gate; qelib1's own crz
  // differs from controlled-u1 by a relative phase, so cu1 is used instead.
  switch (kind) {
    case GateKind::RZ: return "u1";
    case GateKind::CRZ: return "cu1";
    default: return gate_name(kind);
  }
}

GateKind kind_from_qasm_name(const std::string& name) {
  if (name == "u1") return GateKind::RZ;
  if (name == "cu1") return GateKind::CRZ;
  if (name == "rz" || name == "crz") {
    fail(ErrorCode::ParseError, "gate '" + name + "' is ambiguous in qelib1; this reader accepts u1/cu1");
  }
  return gate_kind_from_name(name);
}

struct Line {
  std::string text;
  size_t number;
};

[[noreturn]] void parse_fail(const Line& line, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line.number) + ": " + msg);
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "// hwk-layout: n=" << c.layout.n << " m=" << c.layout.m << "\n";
  os << "qreg q[" << c.layout.total() << "];\n";
  for (const Gate& g : c.gates) {
    os << qasm_name(g.kind);
    if (g.angle_count() > 0) {
      os << '(';
      for (int i = 0; i < g.angle_count(); ++i) {
        if (i > 0) os << ',';
        os << fmt_angle(g.angle[static_cast<size_t>(i)]);
      }
      os << ')';
    }
    os << ' ';
    for (int i = 0; i < g.arity(); ++i) {
      if (i > 0) os << ',';
      os << "q[" << g.qubit[static_cast<size_t>(i)] << "]";
    }
    os << ";\n";
  }
  return os.str();
}

Circuit read_qasm(const std::string& text) {
  std::vector<Line> lines;
  int layout_n = -1;
  int layout_m = -1;
  {
    std::istringstream in(text);
    std::string raw;
    size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      // A layout comment, when present, pins the working/ancilla split.
      size_t comment = raw.find("//");
      if (comment != std::string::npos) {
        std::string body = strip(raw.substr(comment + 2));
        int n = 0, m = 0;
        if (std::sscanf(body.c_str(), "hwk-layout: n=%d m=%d", &n, &m) == 2) {
          layout_n = n;
          layout_m = m;
        }
        raw = raw.substr(0, comment);
      }
      std::string body = strip(raw);
      if (!body.empty()) lines.push_back({body, number});
    }
  }

  size_t pos = 0;
  if (pos >= lines.size() || lines[pos].text != "OPENQASM 2.0;") {
    fail(ErrorCode::ParseError, "expected 'OPENQASM 2.0;' header");
  }
  ++pos;
  if (pos < lines.size() && lines[pos].text.rfind("include", 0) == 0) ++pos;

  if (pos >= lines.size()) fail(ErrorCode::ParseError, "missing qreg declaration");
  int total = 0;
  {
    char name[64];
    if (std::sscanf(lines[pos].text.c_str(), "qreg %63[a-zA-Z_][%d];", name, &total) != 2 || total < 1) {
      parse_fail(lines[pos], "expected 'qreg <name>[N];'");
    }
    ++pos;
  }

  QubitLayout layout = (layout_n >= 0 && layout_n + layout_m == total) ? QubitLayout(layout_n, layout_m)
                                                                       : QubitLayout(total, 0);
  Circuit circuit(layout);

  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    std::string body = line.text;
    if (body.back() != ';') parse_fail(line, "statement must end with ';'");
    body.pop_back();
    body = strip(body);

    size_t name_end = body.find_first_of("( \t");
    if (name_end == std::string::npos) parse_fail(line, "malformed gate statement");
    std::string name = body.substr(0, name_end);
    GateKind kind = kind_from_qasm_name(name);

    std::vector<double> angles;
    size_t rest = name_end;
    if (body[name_end] == '(') {
      size_t close = body.find(')', name_end);
      if (close == std::string::npos) parse_fail(line, "missing ')'");
      std::string arg_text = body.substr(name_end + 1, close - name_end - 1);
      std::istringstream args(arg_text);
      std::string piece;
      while (std::getline(args, piece, ',')) {
        piece = strip(piece);
        char* end = nullptr;
        double value = std::strtod(piece.c_str(), &end);
        if (end == piece.c_str() || *end != '\0') parse_fail(line, "bad angle '" + piece + "'");
        angles.push_back(value);
      }
      rest = close + 1;
    }

    std::vector<int32_t> wires;
    {
      std::istringstream operands(body.substr(rest));
      std::string piece;
      while (std::getline(operands, piece, ',')) {
        piece = strip(piece);
        int wire = -1;
        char reg[64];
        if (std::sscanf(piece.c_str(), "%63[a-zA-Z_][%d]", reg, &wire) != 2 || wire < 0) {
          parse_fail(line, "bad operand '" + piece + "'");
        }
        wires.push_back(wire);
      }
    }

    Gate g{kind, {-1, -1, -1}, {0.0, 0.0, 0.0}};
    if (static_cast<int>(wires.size()) != g.arity()) parse_fail(line, "wrong operand count for '" + name + "'");
    if (static_cast<int>(angles.size()) != g.angle_count()) parse_fail(line, "wrong angle count for '" + name + "'");
    for (size_t i = 0; i < wires.size(); ++i) g.qubit[i] = wires[i];
    for (size_t i = 0; i < angles.size(); ++i) g.angle[i] = angles[i];
    circuit.append(g);  // range/distinctness checks
  }
  return circuit;
}

}  // namespace hwk
