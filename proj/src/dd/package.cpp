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

#include "qdd/dd/package.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <unordered_set>

namespace dd {

namespace {

inline std::size_t hashCombine(std::size_t seed, std::uint64_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6U) + (seed >> 2U));
}

template <typename NodeT> std::size_t hashEdge(const Edge<NodeT>& e) {
  auto h = reinterpret_cast<std::uintptr_t>(e.node) >> 3U;
  h = hashCombine(h, std::bit_cast<std::uint64_t>(e.weight.re));
  h = hashCombine(h, std::bit_cast<std::uint64_t>(e.weight.im));
  return h;
}

template <typename NodeT>
std::size_t hashChildren(Qubit var,
                         const std::array<Edge<NodeT>, NodeT::ARITY>& cs) {
  std::size_t h = var;
  for (const auto& c : cs) {
    h = hashCombine(h, hashEdge(c));
  }
  return h;
}

std::size_t hashPointerPair(const void* a, const void* b) {
  return hashCombine(reinterpret_cast<std::uintptr_t>(a) >> 3U,
                     reinterpret_cast<std::uintptr_t>(b) >> 3U);
}

constexpr qc::Mat2 IDENTITY_FACTOR = {1, 0, 0, 1};
constexpr qc::Mat2 PROJ0 = {1, 0, 0, 0};
constexpr qc::Mat2 PROJ1 = {0, 0, 0, 1};

} // namespace

namespace detail {

ValueTable::ValueTable(double tol) : tolerance(tol) {
  lookup(0.5);
  lookup(std::numbers::sqrt2 / 2);
  lookup(1.0);
}

double ValueTable::lookup(double v) {
  const double mag = std::abs(v);
  if (mag <= tolerance) {
    return 0.0;
  }
  const double scaled = mag / tolerance;
  if (scaled >= 9.0e18) {
    return v;
  }
  const auto key = static_cast<std::int64_t>(scaled);
  for (const auto k : {key - 1, key, key + 1}) {
    const auto it = buckets.find(k);
    if (it == buckets.end()) {
      continue;
    }
    for (const double candidate : it->second) {
      if (std::abs(candidate - mag) <= tolerance) {
        return std::copysign(candidate, v);
      }
    }
  }
  buckets[key].push_back(mag);
  return v;
}

template <typename NodeT>
NodeT* UniqueTable<NodeT>::lookup(
    Qubit var, const std::array<Edge<NodeT>, NodeT::ARITY>& key) {
  if (var >= tables.size()) {
    tables.resize(var + 1);
  }
  auto& table = tables[var];
  const auto slot = hashChildren(var, key) & (table.buckets.size() - 1);
  for (auto* node = table.buckets[slot]; node != nullptr; node = node->next) {
    if (node->children == key) {
      return node;
    }
  }
  return nullptr;
}

template <typename NodeT> void UniqueTable<NodeT>::insert(NodeT* node) {
  auto& table = tables[node->var];
  if (table.entries > 4 * table.buckets.size()) {
    grow(node->var);
  }
  const auto slot =
      hashChildren(node->var, node->children) & (table.buckets.size() - 1);
  node->next = table.buckets[slot];
  table.buckets[slot] = node;
  ++table.entries;
}

template <typename NodeT> void UniqueTable<NodeT>::grow(Qubit var) {
  auto& table = tables[var];
  std::vector<NodeT*> old = std::move(table.buckets);
  table.buckets.assign(old.size() * 4, nullptr);
  for (auto* chain : old) {
    while (chain != nullptr) {
      auto* next = chain->next;
      const auto slot =
          hashChildren(var, chain->children) & (table.buckets.size() - 1);
      chain->next = table.buckets[slot];
      table.buckets[slot] = chain;
      chain = next;
    }
  }
}

template <typename NodeT>
template <typename RecycleFn>
std::size_t UniqueTable<NodeT>::sweep(RecycleFn&& recycle) {
  std::size_t removed = 0;
  for (auto& table : tables) {
    for (auto& bucket : table.buckets) {
      NodeT** link = &bucket;
      while (*link != nullptr) {
        NodeT* node = *link;
        if (node->ref == 0) {
          *link = node->next;
          recycle(node);
          --table.entries;
          ++removed;
        } else {
          link = &node->next;
        }
      }
    }
  }
  return removed;
}

} // namespace detail

Package::Package(PackageConfig cfg)
    : configuration(cfg), values(cfg.complexTolerance) {
  addVTable.resize(cfg.computeTableLog2);
  addMTable.resize(cfg.computeTableLog2);
  multMVTable.resize(cfg.computeTableLog2);
  multMMTable.resize(cfg.computeTableLog2);
  transposeTable.resize(cfg.computeTableLog2);
  innerTable.resize(cfg.computeTableLog2);
}

Complex Package::intern(const Complex& c) {
  return {values.lookup(c.re), values.lookup(c.im)};
}

VectorNode* Package::allocVectorNode() {
  if (vFree != nullptr) {
    auto* node = vFree;
    vFree = node->next;
    return node;
  }
  return &vArena.emplace_back();
}

MatrixNode* Package::allocMatrixNode() {
  if (mFree != nullptr) {
    auto* node = mFree;
    mFree = node->next;
    return node;
  }
  return &mArena.emplace_back();
}

template <typename NodeT>
Edge<NodeT> Package::makeNode(Qubit var,
                              std::array<Edge<NodeT>, NodeT::ARITY> children) {
  for (auto& child : children) {
    if (child.node != nullptr && child.node->var >= var) {
      throw DDError("variable order violation: child var " +
                    std::to_string(child.node->var) +
                    " not below node var " + std::to_string(var));
    }
    child.weight = intern(child.weight);
    if (child.weight.exactlyZero()) {
      child = Edge<NodeT>{};
    }
  }

  // pivot: largest weight magnitude, ties to the lowest child index
  std::size_t pivot = NodeT::ARITY;
  double best = -1.0;
  for (std::size_t i = 0; i < NodeT::ARITY; ++i) {
    if (children[i].isZero()) {
      continue;
    }
    const double mag = abs2(children[i].weight);
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  if (pivot == NodeT::ARITY) {
    return Edge<NodeT>{};
  }

  const Complex pivotWeight = children[pivot].weight;
  for (std::size_t i = 0; i < NodeT::ARITY; ++i) {
    if (i == pivot || children[i].isZero()) {
      continue;
    }
    children[i].weight = intern(children[i].weight / pivotWeight);
    if (children[i].weight.exactlyZero()) {
      children[i] = Edge<NodeT>{};
    }
  }
  children[pivot].weight = Complex{1.0, 0.0};

  auto& unique = [this]() -> auto& {
    if constexpr (std::is_same_v<NodeT, VectorNode>) {
      return vUnique;
    } else {
      return mUnique;
    }
  }();

  NodeT* node = unique.lookup(var, children);
  if (node == nullptr) {
    if constexpr (std::is_same_v<NodeT, VectorNode>) {
      node = allocVectorNode();
    } else {
      node = allocMatrixNode();
    }
    node->var = var;
    node->children = children;
    node->ref = 0;
    node->next = nullptr;
    unique.insert(node);
    ++statistics.nodesCreated;
    ++statistics.liveNodes;
    statistics.peakNodes = std::max(statistics.peakNodes,
                                    statistics.liveNodes);
  }
  return Edge<NodeT>{pivotWeight, node};
}

VectorEdge Package::makeVectorNode(Qubit var,
                                   std::array<VectorEdge, 2> children) {
  return makeNode<VectorNode>(var, children);
}

MatrixEdge Package::makeMatrixNode(Qubit var,
                                   std::array<MatrixEdge, 4> children) {
  return makeNode<MatrixNode>(var, children);
}

VectorDD Package::makeZeroState(std::size_t numQubits) {
  return makeBasisState(numQubits, 0);
}

VectorDD Package::makeBasisState(std::size_t numQubits,
                                 std::uint64_t basisIndex) {
  if (numQubits == 0 || numQubits > 64) {
    throw DDError("unsupported qubit count " + std::to_string(numQubits));
  }
  if (numQubits < 64 && (basisIndex >> numQubits) != 0) {
    throw DDError("basis index out of range");
  }
  VectorEdge edge = vOne();
  for (std::size_t q = 0; q < numQubits; ++q) {
    const bool bit = ((basisIndex >> q) & 1U) != 0;
    std::array<VectorEdge, 2> children{vZero(), vZero()};
    children[bit ? 1 : 0] = edge;
    edge = makeVectorNode(static_cast<Qubit>(q), children);
  }
  return {edge, numQubits};
}

MatrixDD Package::makeIdentity(std::size_t numQubits) {
  if (numQubits == 0 || numQubits > 64) {
    throw DDError("unsupported qubit count " + std::to_string(numQubits));
  }
  return {makeFactorChain(numQubits, {}), numQubits};
}

MatrixEdge Package::makeFactorChain(
    std::size_t numQubits,
    const std::unordered_map<Qubit, qc::Mat2>& factors) {
  MatrixEdge edge = mOne();
  for (std::size_t q = 0; q < numQubits; ++q) {
    const auto it = factors.find(static_cast<Qubit>(q));
    const qc::Mat2& f = it == factors.end() ? IDENTITY_FACTOR : it->second;
    std::array<MatrixEdge, 4> children;
    for (std::size_t k = 0; k < 4; ++k) {
      children[k] = MatrixEdge{
          Complex{f[k].real(), f[k].imag()} * edge.weight, edge.node};
    }
    edge = makeMatrixNode(static_cast<Qubit>(q), children);
  }
  return edge;
}

MatrixDD Package::makeGateMatrix(const qc::Gate& gate, std::size_t numQubits) {
  if (!gate.isUnitary() && gate.kind != qc::OpKind::Barrier) {
    throw DDError("cannot build an operator for non-unitary op '" +
                  qc::toString(gate.kind) + "'");
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] >= numQubits) {
      throw DDError("gate operand q[" + std::to_string(gate.qubits[i]) +
                    "] outside " + std::to_string(numQubits) + " qubits");
    }
    for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw DDError("duplicate gate operand q[" +
                      std::to_string(gate.qubits[i]) + "]");
      }
    }
  }

  switch (gate.kind) {
  case qc::OpKind::Barrier:
    return makeIdentity(numQubits);
  case qc::OpKind::Cx:
  case qc::OpKind::Cz: {
    const auto control = gate.qubits[0];
    const auto target = gate.qubits[1];
    qc::Gate base;
    base.kind = gate.kind == qc::OpKind::Cx ? qc::OpKind::X : qc::OpKind::Z;
    const auto rest = makeFactorChain(numQubits, {{control, PROJ0}});
    const auto applied = makeFactorChain(
        numQubits, {{control, PROJ1}, {target, base.matrix2()}});
    return {addEdges(rest, applied), numQubits};
  }
  case qc::OpKind::Swap: {
    const auto a = gate.qubits[0];
    const auto b = gate.qubits[1];
    MatrixEdge sum = mZero();
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        qc::Mat2 onA{0, 0, 0, 0};
        qc::Mat2 onB{0, 0, 0, 0};
        onA[i * 2 + j] = 1; // |i><j| on a
        onB[j * 2 + i] = 1; // |j><i| on b
        sum = addEdges(sum,
                       makeFactorChain(numQubits, {{a, onA}, {b, onB}}));
      }
    }
    return {sum, numQubits};
  }
  default:
    return {makeFactorChain(numQubits, {{gate.qubits[0], gate.matrix2()}}),
            numQubits};
  }
}

// --- arithmetic -----------------------------------------------------------

VectorDD Package::add(const VectorDD& a, const VectorDD& b) {
  if (a.numQubits != b.numQubits) {
    throw DDError("dimension mismatch in add: " +
                  std::to_string(a.numQubits) + " vs " +
                  std::to_string(b.numQubits) + " qubits");
  }
  return {addEdges(a.root, b.root), a.numQubits};
}

MatrixDD Package::add(const MatrixDD& a, const MatrixDD& b) {
  if (a.numQubits != b.numQubits) {
    throw DDError("dimension mismatch in add: " +
                  std::to_string(a.numQubits) + " vs " +
                  std::to_string(b.numQubits) + " qubits");
  }
  return {addEdges(a.root, b.root), a.numQubits};
}

namespace {
template <typename EdgeT>
std::pair<EdgeT, EdgeT> orderCommutative(const EdgeT& a, const EdgeT& b) {
  if (a.node == b.node
          ? std::bit_cast<std::uint64_t>(a.weight.re) >
                std::bit_cast<std::uint64_t>(b.weight.re)
          : a.node > b.node) {
    return {b, a};
  }
  return {a, b};
}
} // namespace

VectorEdge Package::addEdges(const VectorEdge& a, const VectorEdge& b) {
  if (a.isZero()) {
    return b;
  }
  if (b.isZero()) {
    return a;
  }
  if (a.isTerminal() && b.isTerminal()) {
    const auto sum = intern(a.weight + b.weight);
    return sum.exactlyZero() ? vZero() : VectorEdge{sum, nullptr};
  }
  if (a.isTerminal() || b.isTerminal() || a.node->var != b.node->var) {
    throw DDError("level mismatch in add");
  }

  const auto [x, y] = orderCommutative(a, b);
  const BinaryVKey key{x, y};
  const auto hash = hashCombine(hashEdge(x), hashEdge(y));
  if (const auto* cached = addVTable.find(key, hash, statistics)) {
    return *cached;
  }

  std::array<VectorEdge, 2> children;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& ca = x.node->children[i];
    const auto& cb = y.node->children[i];
    children[i] =
        addEdges(VectorEdge{intern(x.weight * ca.weight), ca.node},
                 VectorEdge{intern(y.weight * cb.weight), cb.node});
  }
  const auto result = makeVectorNode(x.node->var, children);
  addVTable.put(key, hash, result);
  return result;
}

MatrixEdge Package::addEdges(const MatrixEdge& a, const MatrixEdge& b) {
  if (a.isZero()) {
    return b;
  }
  if (b.isZero()) {
    return a;
  }
  if (a.isTerminal() && b.isTerminal()) {
    const auto sum = intern(a.weight + b.weight);
    return sum.exactlyZero() ? mZero() : MatrixEdge{sum, nullptr};
  }
  if (a.isTerminal() || b.isTerminal() || a.node->var != b.node->var) {
    throw DDError("level mismatch in add");
  }

  const auto [x, y] = orderCommutative(a, b);
  const BinaryMKey key{x, y};
  const auto hash = hashCombine(hashEdge(x), hashEdge(y));
  if (const auto* cached = addMTable.find(key, hash, statistics)) {
    return *cached;
  }

  std::array<MatrixEdge, 4> children;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& ca = x.node->children[i];
    const auto& cb = y.node->children[i];
    children[i] =
        addEdges(MatrixEdge{intern(x.weight * ca.weight), ca.node},
                 MatrixEdge{intern(y.weight * cb.weight), cb.node});
  }
  const auto result = makeMatrixNode(x.node->var, children);
  addMTable.put(key, hash, result);
  return result;
}

VectorDD Package::multiply(const MatrixDD& m, const VectorDD& v) {
  if (m.numQubits != v.numQubits) {
    throw DDError("dimension mismatch in multiply: " +
                  std::to_string(m.numQubits) + " vs " +
                  std::to_string(v.numQubits) + " qubits");
  }
  return {multiplyEdges(m.root, v.root), v.numQubits};
}

MatrixDD Package::multiply(const MatrixDD& a, const MatrixDD& b) {
  if (a.numQubits != b.numQubits) {
    throw DDError("dimension mismatch in multiply: " +
                  std::to_string(a.numQubits) + " vs " +
                  std::to_string(b.numQubits) + " qubits");
  }
  return {multiplyEdges(a.root, b.root), a.numQubits};
}

VectorEdge Package::multiplyEdges(const MatrixEdge& m, const VectorEdge& v) {
  if (m.isZero() || v.isZero()) {
    return vZero();
  }
  const auto weight = intern(m.weight * v.weight);
  if (weight.exactlyZero()) {
    return vZero();
  }
  if (m.isTerminal() && v.isTerminal()) {
    return {weight, nullptr};
  }
  if (m.isTerminal() || v.isTerminal() || m.node->var != v.node->var) {
    throw DDError("level mismatch in multiply");
  }

  const NodePairKey key{m.node, v.node};
  const auto hash = hashPointerPair(m.node, v.node);
  VectorEdge result;
  if (const auto* cached = multMVTable.find(key, hash, statistics)) {
    result = *cached;
  } else {
    std::array<VectorEdge, 2> children;
    for (std::size_t row = 0; row < 2; ++row) {
      children[row] =
          addEdges(multiplyEdges(m.node->children[row * 2 + 0],
                                 v.node->children[0]),
                   multiplyEdges(m.node->children[row * 2 + 1],
                                 v.node->children[1]));
    }
    result = makeVectorNode(v.node->var, children);
    multMVTable.put(key, hash, result);
  }
  const auto finalWeight = intern(result.weight * weight);
  return finalWeight.exactlyZero() ? vZero()
                                   : VectorEdge{finalWeight, result.node};
}

MatrixEdge Package::multiplyEdges(const MatrixEdge& a, const MatrixEdge& b) {
  if (a.isZero() || b.isZero()) {
    return mZero();
  }
  const auto weight = intern(a.weight * b.weight);
  if (weight.exactlyZero()) {
    return mZero();
  }
  if (a.isTerminal() && b.isTerminal()) {
    return {weight, nullptr};
  }
  if (a.isTerminal() || b.isTerminal() || a.node->var != b.node->var) {
    throw DDError("level mismatch in multiply");
  }

  const NodePairKey key{a.node, b.node};
  const auto hash = hashPointerPair(a.node, b.node);
  MatrixEdge result;
  if (const auto* cached = multMMTable.find(key, hash, statistics)) {
    result = *cached;
  } else {
    std::array<MatrixEdge, 4> children;
    for (std::size_t row = 0; row < 2; ++row) {
      for (std::size_t col = 0; col < 2; ++col) {
        children[row * 2 + col] =
            addEdges(multiplyEdges(a.node->children[row * 2 + 0],
                                   b.node->children[0 * 2 + col]),
                     multiplyEdges(a.node->children[row * 2 + 1],
                                   b.node->children[1 * 2 + col]));
      }
    }
    result = makeMatrixNode(a.node->var, children);
    multMMTable.put(key, hash, result);
  }
  const auto finalWeight = intern(result.weight * weight);
  return finalWeight.exactlyZero() ? mZero()
                                   : MatrixEdge{finalWeight, result.node};
}

MatrixDD Package::conjugateTranspose(const MatrixDD& m) {
  return {conjugateTransposeEdge(m.root), m.numQubits};
}

MatrixEdge Package::conjugateTransposeEdge(const MatrixEdge& m) {
  if (m.isTerminal()) {
    return {conj(m.weight), nullptr};
  }
  const void* key = m.node;
  const auto hash = hashCombine(0, reinterpret_cast<std::uintptr_t>(key));
  MatrixEdge result;
  if (const auto* cached = transposeTable.find(key, hash, statistics)) {
    result = *cached;
  } else {
    const auto& c = m.node->children;
    const std::array<MatrixEdge, 4> children{
        conjugateTransposeEdge(c[0]), conjugateTransposeEdge(c[2]),
        conjugateTransposeEdge(c[1]), conjugateTransposeEdge(c[3])};
    result = makeMatrixNode(m.node->var, children);
    transposeTable.put(key, hash, result);
  }
  const auto weight = intern(conj(m.weight) * result.weight);
  return weight.exactlyZero() ? mZero() : MatrixEdge{weight, result.node};
}

// --- queries ----------------------------------------------------------------

Complex Package::getAmplitude(const VectorDD& v, std::string_view bits) const {
  if (bits.size() != v.numQubits) {
    throw DDError("bitstring length " + std::to_string(bits.size()) +
                  " does not match " + std::to_string(v.numQubits) +
                  " qubits");
  }
  Complex amp = v.root.weight;
  const VectorNode* node = v.root.node;
  for (const char c : bits) {
    if (c != '0' && c != '1') {
      throw DDError("bitstring must consist of 0/1 characters");
    }
    if (amp.exactlyZero() || node == nullptr) {
      return {};
    }
    const auto& edge = node->children[c == '1' ? 1 : 0];
    amp = amp * edge.weight;
    node = edge.node;
  }
  return amp;
}

Complex Package::getMatrixEntry(const MatrixDD& m, std::uint64_t row,
                                std::uint64_t col) const {
  if (m.numQubits < 64 &&
      ((row >> m.numQubits) != 0 || (col >> m.numQubits) != 0)) {
    throw DDError("matrix index out of range");
  }
  Complex value = m.root.weight;
  const MatrixNode* node = m.root.node;
  for (std::size_t i = 0; i < m.numQubits; ++i) {
    if (value.exactlyZero() || node == nullptr) {
      return {};
    }
    const auto q = m.numQubits - 1 - i;
    const auto r = (row >> q) & 1U;
    const auto c = (col >> q) & 1U;
    const auto& edge = node->children[r * 2 + c];
    value = value * edge.weight;
    node = edge.node;
  }
  return value;
}

Complex Package::innerProduct(const VectorDD& a, const VectorDD& b) {
  if (a.numQubits != b.numQubits) {
    throw DDError("dimension mismatch in inner product");
  }
  return innerProductEdges(a.root, b.root, a.numQubits);
}

Complex Package::innerProductEdges(const VectorEdge& a, const VectorEdge& b,
                                   std::size_t level) {
  if (a.isZero() || b.isZero()) {
    return {};
  }
  if (level == 0) {
    return conj(a.weight) * b.weight;
  }
  if (a.isTerminal() || b.isTerminal()) {
    throw DDError("level mismatch in inner product");
  }
  const NodePairKey key{a.node, b.node};
  const auto hash = hashPointerPair(a.node, b.node);
  Complex sum;
  if (const auto* cached = innerTable.find(key, hash, statistics)) {
    sum = *cached;
  } else {
    sum = innerProductEdges(a.node->children[0], b.node->children[0],
                            level - 1) +
          innerProductEdges(a.node->children[1], b.node->children[1],
                            level - 1);
    innerTable.put(key, hash, sum);
  }
  return conj(a.weight) * b.weight * sum;
}

double Package::fidelity(const VectorDD& a, const VectorDD& b) {
  return abs2(innerProduct(a, b));
}

double Package::norm2(const VectorDD& v) {
  return innerProduct(v, v).re;
}

namespace {
template <typename NodeT>
void countNodes(const NodeT* node, std::unordered_set<const void*>& seen) {
  if (node == nullptr || !seen.insert(node).second) {
    return;
  }
  for (const auto& child : node->children) {
    countNodes(child.node, seen);
  }
}
} // namespace

std::size_t Package::nodeCount(const VectorDD& v) {
  std::unordered_set<const void*> seen;
  countNodes(v.root.node, seen);
  return seen.size();
}

std::size_t Package::nodeCount(const MatrixDD& m) {
  std::unordered_set<const void*> seen;
  countNodes(m.root.node, seen);
  return seen.size();
}

// --- reference counting & GC -------------------------------------------------

template <typename EdgeT> void Package::incRefImpl(const EdgeT& e) {
  auto* node = e.node;
  if (node == nullptr ||
      node->ref == std::numeric_limits<std::uint32_t>::max()) {
    return;
  }
  ++node->ref;
  if (node->ref == 1) {
    if (statistics.deadNodes > 0) {
      --statistics.deadNodes;
    }
    for (const auto& child : node->children) {
      incRefImpl(child);
    }
  }
}

template <typename EdgeT> void Package::decRefImpl(const EdgeT& e) {
  auto* node = e.node;
  if (node == nullptr ||
      node->ref == std::numeric_limits<std::uint32_t>::max()) {
    return;
  }
  if (node->ref == 0) {
    throw DDError("reference count underflow");
  }
  --node->ref;
  if (node->ref == 0) {
    ++statistics.deadNodes;
    for (const auto& child : node->children) {
      decRefImpl(child);
    }
  }
}

void Package::incRef(const VectorEdge& e) { incRefImpl(e); }
void Package::decRef(const VectorEdge& e) { decRefImpl(e); }
void Package::incRef(const MatrixEdge& e) { incRefImpl(e); }
void Package::decRef(const MatrixEdge& e) { decRefImpl(e); }

void Package::collectGarbage(bool force) {
  if (!force && statistics.deadNodes < configuration.gcDeadThreshold) {
    return;
  }
  const auto removedV = vUnique.sweep([this](VectorNode* node) {
    node->next = vFree;
    vFree = node;
  });
  const auto removedM = mUnique.sweep([this](MatrixNode* node) {
    node->next = mFree;
    mFree = node;
  });
  statistics.liveNodes -= removedV + removedM;
  statistics.deadNodes = 0;
  ++statistics.gcRuns;
  clearComputeTables();
}

void Package::clearComputeTables() {
  addVTable.clear();
  addMTable.clear();
  multMVTable.clear();
  multMMTable.clear();
  transposeTable.clear();
  innerTable.clear();
}

} // namespace dd
