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

#include "qdd/qc/gate.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qc {

/// Gate-level circuit over flat qubit/clbit registers. Measurements are
/// restricted to a trailing suffix; the builder methods enforce this.
/// Circuits are cheap to copy and immutable once built, so they can be
/// shared read-only across threads.
class QuantumCircuit {
public:
  QuantumCircuit() = default;
  explicit QuantumCircuit(std::size_t nq, std::size_t nc = 0,
                          std::string circuitName = "")
      : numQubits(nq), numClbits(nc), name(std::move(circuitName)) {}

  std::size_t numQubits{0};
  std::size_t numClbits{0};
  std::vector<Gate> ops;
  std::string name;

  void h(Qubit q) { addSingle(OpKind::H, q); }
  void x(Qubit q) { addSingle(OpKind::X, q); }
  void y(Qubit q) { addSingle(OpKind::Y, q); }
  void z(Qubit q) { addSingle(OpKind::Z, q); }
  void s(Qubit q) { addSingle(OpKind::S, q); }
  void sdg(Qubit q) { addSingle(OpKind::Sdg, q); }
  void t(Qubit q) { addSingle(OpKind::T, q); }
  void tdg(Qubit q) { addSingle(OpKind::Tdg, q); }
  void rx(double theta, Qubit q) { addRotation(OpKind::Rx, theta, q); }
  void ry(double theta, Qubit q) { addRotation(OpKind::Ry, theta, q); }
  void rz(double theta, Qubit q) { addRotation(OpKind::Rz, theta, q); }
  void p(double lambda, Qubit q) { addRotation(OpKind::P, lambda, q); }
  void cx(Qubit control, Qubit target) {
    addTwo(OpKind::Cx, control, target);
  }
  void cz(Qubit control, Qubit target) {
    addTwo(OpKind::Cz, control, target);
  }
  void swap(Qubit a, Qubit b) { addTwo(OpKind::Swap, a, b); }
  void barrier(std::vector<Qubit> qubits);
  void barrierAll();
  void measure(Qubit q, Clbit c);
  void measureAll();

  /// Appends a pre-built gate, running the same validity checks as the
  /// named builders.
  void append(const Gate& g);

  [[nodiscard]] bool hasMeasurements() const;

  bool operator==(const QuantumCircuit& other) const {
    return numQubits == other.numQubits && numClbits == other.numClbits &&
           ops == other.ops;
  }

private:
  void addSingle(OpKind kind, Qubit q);
  void addRotation(OpKind kind, double angle, Qubit q);
  void addTwo(OpKind kind, Qubit a, Qubit b);
  void checkQubit(Qubit q) const;
  void checkNoTrailingMeasure() const;
};

/// Longest chain of operations sharing qubits. Barriers synchronize their
/// qubits without contributing a time step; measurements count.
[[nodiscard]] std::size_t depth(const QuantumCircuit& c);

/// Histogram of operation counts keyed by QASM mnemonic.
[[nodiscard]] std::map<std::string, std::size_t>
gateCounts(const QuantumCircuit& c);

/// Inverse circuit: every gate replaced by its adjoint, in reverse order.
/// Barriers are kept in place; measurements are rejected.
[[nodiscard]] QuantumCircuit invert(const QuantumCircuit& c);

/// Measured (qubit, clbit) pairs in op order.
using MeasurementMap = std::vector<std::pair<Qubit, Clbit>>;

/// Splits off the trailing measurements. The returned circuit contains all
/// remaining operations; the map records which qubit feeds which clbit.
[[nodiscard]] std::pair<QuantumCircuit, MeasurementMap>
stripMeasurements(const QuantumCircuit& c);

} // namespace qc
