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

#include "qdd/qc/gate.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

namespace qc {

namespace {
const std::unordered_map<OpKind, std::string> KIND_NAMES = {
    {OpKind::H, "h"},         {OpKind::X, "x"},
    {OpKind::Y, "y"},         {OpKind::Z, "z"},
    {OpKind::S, "s"},         {OpKind::Sdg, "sdg"},
    {OpKind::T, "t"},         {OpKind::Tdg, "tdg"},
    {OpKind::Rx, "rx"},       {OpKind::Ry, "ry"},
    {OpKind::Rz, "rz"},       {OpKind::P, "p"},
    {OpKind::Cx, "cx"},       {OpKind::Cz, "cz"},
    {OpKind::Swap, "swap"},   {OpKind::Measure, "measure"},
    {OpKind::Barrier, "barrier"},
};

constexpr std::complex<double> I_UNIT{0.0, 1.0};
const double SQRT2_INV = 1.0 / std::numbers::sqrt2;
} // namespace

const std::string& toString(OpKind kind) { return KIND_NAMES.at(kind); }

bool isUnitary(OpKind kind) {
  return kind != OpKind::Measure && kind != OpKind::Barrier;
}

bool isParameterized(OpKind kind) {
  return kind == OpKind::Rx || kind == OpKind::Ry || kind == OpKind::Rz ||
         kind == OpKind::P;
}

bool isTwoQubit(OpKind kind) {
  return kind == OpKind::Cx || kind == OpKind::Cz || kind == OpKind::Swap;
}

Gate Gate::adjoint() const {
  if (kind == OpKind::Measure) {
    throw CircuitError("cannot take the adjoint of a measurement");
  }
  Gate inv = *this;
  switch (kind) {
  case OpKind::S:
    inv.kind = OpKind::Sdg;
    break;
  case OpKind::Sdg:
    inv.kind = OpKind::S;
    break;
  case OpKind::T:
    inv.kind = OpKind::Tdg;
    break;
  case OpKind::Tdg:
    inv.kind = OpKind::T;
    break;
  case OpKind::Rx:
  case OpKind::Ry:
  case OpKind::Rz:
  case OpKind::P:
    inv.angle = -angle;
    break;
  default:
    break; // H, X, Y, Z, Cx, Cz, Swap, Barrier are self-inverse
  }
  return inv;
}

Mat2 Gate::matrix2() const {
  switch (kind) {
  case OpKind::H:
    return {SQRT2_INV, SQRT2_INV, SQRT2_INV, -SQRT2_INV};
  case OpKind::X:
    return {0, 1, 1, 0};
  case OpKind::Y:
    return {0, -I_UNIT, I_UNIT, 0};
  case OpKind::Z:
    return {1, 0, 0, -1};
  case OpKind::S:
    return {1, 0, 0, I_UNIT};
  case OpKind::Sdg:
    return {1, 0, 0, -I_UNIT};
  case OpKind::T:
    return {1, 0, 0, std::exp(I_UNIT * (std::numbers::pi / 4))};
  case OpKind::Tdg:
    return {1, 0, 0, std::exp(-I_UNIT * (std::numbers::pi / 4))};
  case OpKind::Rx:
    return {std::cos(angle / 2), -I_UNIT * std::sin(angle / 2),
            -I_UNIT * std::sin(angle / 2), std::cos(angle / 2)};
  case OpKind::Ry:
    return {std::cos(angle / 2), -std::sin(angle / 2), std::sin(angle / 2),
            std::cos(angle / 2)};
  case OpKind::Rz:
    return {std::exp(-I_UNIT * (angle / 2)), 0, 0,
            std::exp(I_UNIT * (angle / 2))};
  case OpKind::P:
    return {1, 0, 0, std::exp(I_UNIT * angle)};
  default:
    throw CircuitError("no 2x2 matrix for " + toString(kind));
  }
}

Mat4 Gate::matrix4() const {
  switch (kind) {
  case OpKind::Cx:
    // control is the high bit
    return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
  case OpKind::Cz:
    return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
  case OpKind::Swap:
    return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
  default:
    throw CircuitError("no 4x4 matrix for " + toString(kind));
  }
}

} // namespace qc
