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

#include "qdd/qc/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qc {

void QuantumCircuit::checkQubit(Qubit q) const {
  if (q >= numQubits) {
    throw CircuitError("qubit index " + std::to_string(q) +
                       " out of range for " + std::to_string(numQubits) +
                       "-qubit circuit");
  }
}

void QuantumCircuit::checkNoTrailingMeasure() const {
  if (!ops.empty() && ops.back().kind == OpKind::Measure) {
    throw CircuitError("cannot add operations after a measurement; "
                       "measurements must form a trailing suffix");
  }
}

void QuantumCircuit::addSingle(OpKind kind, Qubit q) {
  checkQubit(q);
  checkNoTrailingMeasure();
  ops.push_back(Gate{kind, {q}, 0.0, -1});
}

void QuantumCircuit::addRotation(OpKind kind, double angle, Qubit q) {
  checkQubit(q);
  checkNoTrailingMeasure();
  ops.push_back(Gate{kind, {q}, angle, -1});
}

void QuantumCircuit::addTwo(OpKind kind, Qubit a, Qubit b) {
  checkQubit(a);
  checkQubit(b);
  if (a == b) {
    throw CircuitError("duplicate operand q[" + std::to_string(a) + "] in " +
                       toString(kind));
  }
  checkNoTrailingMeasure();
  ops.push_back(Gate{kind, {a, b}, 0.0, -1});
}

void QuantumCircuit::barrier(std::vector<Qubit> qubits) {
  std::set<Qubit> seen;
  for (const auto q : qubits) {
    checkQubit(q);
    if (!seen.insert(q).second) {
      throw CircuitError("duplicate operand q[" + std::to_string(q) +
                         "] in barrier");
    }
  }
  checkNoTrailingMeasure();
  ops.push_back(Gate{OpKind::Barrier, std::move(qubits), 0.0, -1});
}

void QuantumCircuit::barrierAll() {
  std::vector<Qubit> all(numQubits);
  std::iota(all.begin(), all.end(), 0U);
  barrier(std::move(all));
}

void QuantumCircuit::measure(Qubit q, Clbit c) {
  checkQubit(q);
  if (c >= numClbits) {
    throw CircuitError("clbit index " + std::to_string(c) +
                       " out of range for " + std::to_string(numClbits) +
                       "-clbit circuit");
  }
  ops.push_back(Gate{OpKind::Measure, {q}, 0.0, static_cast<std::int64_t>(c)});
}

void QuantumCircuit::measureAll() {
  if (numClbits < numQubits) {
    numClbits = numQubits;
  }
  for (Qubit q = 0; q < numQubits; ++q) {
    measure(q, q);
  }
}

void QuantumCircuit::append(const Gate& g) {
  switch (g.kind) {
  case OpKind::Measure:
    if (g.qubits.size() != 1 || g.clbit < 0) {
      throw CircuitError("malformed measurement");
    }
    measure(g.qubits.front(), static_cast<Clbit>(g.clbit));
    break;
  case OpKind::Barrier:
    barrier(g.qubits);
    break;
  case OpKind::Cx:
  case OpKind::Cz:
  case OpKind::Swap:
    if (g.qubits.size() != 2) {
      throw CircuitError("two-qubit gate needs exactly two operands");
    }
    addTwo(g.kind, g.qubits[0], g.qubits[1]);
    ops.back().angle = g.angle;
    break;
  default:
    if (g.qubits.size() != 1) {
      throw CircuitError("single-qubit gate needs exactly one operand");
    }
    addRotation(g.kind, g.angle, g.qubits.front());
    break;
  }
}

bool QuantumCircuit::hasMeasurements() const {
  return std::any_of(ops.begin(), ops.end(), [](const Gate& g) {
    return g.kind == OpKind::Measure;
  });
}

std::size_t depth(const QuantumCircuit& c) {
  std::vector<std::size_t> level(c.numQubits, 0);
  for (const auto& g : c.ops) {
    if (g.qubits.empty()) {
      continue;
    }
    std::size_t t = 0;
    for (const auto q : g.qubits) {
      t = std::max(t, level[q]);
    }
    if (g.kind != OpKind::Barrier) {
      ++t;
    }
    for (const auto q : g.qubits) {
      level[q] = t;
    }
  }
  return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
}

std::map<std::string, std::size_t> gateCounts(const QuantumCircuit& c) {
  std::map<std::string, std::size_t> counts;
  for (const auto& g : c.ops) {
    ++counts[toString(g.kind)];
  }
  return counts;
}

QuantumCircuit invert(const QuantumCircuit& c) {
  QuantumCircuit inv(c.numQubits, c.numClbits, c.name);
  for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
    if (it->kind == OpKind::Measure) {
      throw CircuitError(
          "cannot invert a circuit containing measurements; strip them first");
    }
    inv.append(it->kind == OpKind::Barrier ? *it : it->adjoint());
  }
  return inv;
}

std::pair<QuantumCircuit, MeasurementMap>
stripMeasurements(const QuantumCircuit& c) {
  QuantumCircuit bare(c.numQubits, c.numClbits, c.name);
  MeasurementMap measurements;
  for (const auto& g : c.ops) {
    if (g.kind == OpKind::Measure) {
      measurements.emplace_back(g.qubits.front(),
                                static_cast<Clbit>(g.clbit));
    } else {
      bare.append(g);
    }
  }
  return {std::move(bare), std::move(measurements)};
}

} // namespace qc
