// Copyright 2026 The gmsc authors
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

#include <stdexcept>
#include <string>

#include "gms/circuit.hpp"

namespace gms {

class QasmError : public std::runtime_error {
 public:
  QasmError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Parses an OpenQASM 2.0 subset: qreg declarations and gate calls from
/// {x, y, z, h, s, sdg, t, tdg, rx, ry, rz, u1, u2, u3, cx, cz, swap, ccx},
/// plus the output extensions r(theta,phi), xx(alpha), and
/// `gms(angle) [i-j, ...];`. barrier and include lines are ignored.
/// ccx is expanded to the standard 6-CNOT decomposition; u1/u2/u3 and ry are
/// lowered to RZ/RX sequences. Float angles are snapped to exact rational
/// multiples of pi when possible (tol 1e-12, denominator <= 10^6).
/// Throws QasmError with line/column on syntax errors and on unsupported
/// constructs (measure, reset, if, opaque, creg, gate definitions).
Circuit parse_qasm(const std::string& text, const std::string& name = "");

/// Serializes back to the extended QASM dialect above. Round trip:
/// parse_qasm(emit_qasmx(c)) reproduces c gate for gate.
std::string emit_qasmx(const Circuit& c);

}  // namespace gms
