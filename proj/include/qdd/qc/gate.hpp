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

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

using Qubit = std::uint32_t;
using Clbit = std::uint32_t;

class CircuitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class OpKind : std::uint8_t {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  Rx,
  Ry,
  Rz,
  P,
  Cx,
  Cz,
  Swap,
  Measure,
  Barrier,
};

[[nodiscard]] const std::string& toString(OpKind kind);
[[nodiscard]] bool isUnitary(OpKind kind);
[[nodiscard]] bool isParameterized(OpKind kind);
[[nodiscard]] bool isTwoQubit(OpKind kind);

using Mat2 = std::array<std::complex<double>, 4>;  // row-major 2x2
using Mat4 = std::array<std::complex<double>, 16>; // row-major 4x4

/// A single circuit operation. Two-qubit gates store operands as
/// {control, target} for Cx/Cz and {a, b} for Swap. Barrier stores the
/// full list of synchronized qubits.
struct Gate {
  OpKind kind{OpKind::H};
  std::vector<Qubit> qubits;
  double angle{0.0};
  std::int64_t clbit{-1};

  [[nodiscard]] bool isUnitary() const { return qc::isUnitary(kind); }

  /// Adjoint of a unitary gate (S <-> Sdg, rotations negate, the rest are
  /// self-inverse). Throws for Measure.
  [[nodiscard]] Gate adjoint() const;

  /// 2x2 matrix for single-qubit unitary kinds.
  [[nodiscard]] Mat2 matrix2() const;
  /// 4x4 matrix for two-qubit unitary kinds; the first operand is the
  /// high-order bit of the basis index.
  [[nodiscard]] Mat4 matrix4() const;

  bool operator==(const Gate& other) const {
    return kind == other.kind && qubits == other.qubits &&
           angle == other.angle && clbit == other.clbit;
  }
};

} // namespace qc
