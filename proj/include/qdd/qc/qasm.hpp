// Copyright 2026 The qdd developers
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

#include "qdd/qc/circuit.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace qc {

/// Lexical or syntax error, with 1-based source position.
class ParseError : public CircuitError {
public:
  ParseError(std::size_t lineNo, std::size_t columnNo,
             const std::string& message)
      : CircuitError("line " + std::to_string(lineNo) + ", column " +
                     std::to_string(columnNo) + ": " + message),
        line(lineNo), column(columnNo) {}

  std::size_t line;
  std::size_t column;
};

/// Statement is valid OpenQASM but outside the supported subset.
class UnsupportedError : public ParseError {
public:
  UnsupportedError(std::size_t lineNo, std::size_t columnNo,
                   const std::string& construct)
      : ParseError(lineNo, columnNo,
                   "unsupported construct '" + construct + "'"),
        what_construct(construct) {}

  std::string what_construct;
};

/// Parses the supported OpenQASM 2.0 subset: one or more qreg/creg
/// declarations (flattened in declaration order), the standard gate set
/// h/x/y/z/s/sdg/t/tdg/rx/ry/rz/p/cx/cz/swap, barrier, and trailing
/// measure statements. A literal `include "qelib1.inc";` is ignored.
QuantumCircuit parseQasm(std::istream& in);
QuantumCircuit parseQasm(const std::string& text);
QuantumCircuit parseQasmFile(const std::string& path);

/// Serializes a circuit as OpenQASM 2.0, one statement per line, angles
/// with 17 significant digits. parseQasm(writeQasm(c)) == c.
void writeQasm(const QuantumCircuit& c, std::ostream& out);
std::string writeQasm(const QuantumCircuit& c);

} // namespace qc
