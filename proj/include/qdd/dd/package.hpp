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

#include "qdd/dd/complex.hpp"
#include "qdd/qc/gate.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dd {

class DDError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Qubit = std::uint32_t;

struct VectorNode;
struct MatrixNode;

/// Weighted edge into the DAG. A null target is the terminal; the canonical
/// zero edge is a terminal edge with weight exactly 0.
template <typename NodeT> struct Edge {
  Complex weight{};
  NodeT* node{nullptr};

  [[nodiscard]] bool isTerminal() const { return node == nullptr; }
  [[nodiscard]] bool isZero() const {
    return node == nullptr && weight.exactlyZero();
  }
  bool operator==(const Edge&) const = default;
};

using VectorEdge = Edge<VectorNode>;
using MatrixEdge = Edge<MatrixNode>;

/// Decision node for state vectors: children indexed by the basis value of
/// qubit `var`. Nodes are normalized (one child weight is exactly 1) and
/// hash-consed, so structural equality is pointer equality.
struct VectorNode {
  static constexpr std::size_t ARITY = 2;
  std::array<VectorEdge, 2> children;
  VectorNode* next{nullptr};
  std::uint32_t ref{0};
  Qubit var{0};
};

/// Decision node for operators: children indexed by (row, col) bits of
/// qubit `var`, i.e. {00, 01, 10, 11}.
struct MatrixNode {
  static constexpr std::size_t ARITY = 4;
  std::array<MatrixEdge, 4> children;
  MatrixNode* next{nullptr};
  std::uint32_t ref{0};
  Qubit var{0};
};

/// A state vector DD over a fixed number of qubits. Every path from the
/// root visits each variable exactly once (no skipped levels).
struct VectorDD {
  VectorEdge root;
  std::size_t numQubits{0};
};

/// An operator DD; the identity on n qubits has exactly n nodes.
struct MatrixDD {
  MatrixEdge root;
  std::size_t numQubits{0};
};

struct PackageConfig {
  /// Unification tolerance for complex values (weights closer than this
  /// share one table entry; magnitudes below it collapse to zero).
  double complexTolerance{1e-10};
  /// Tolerance for norm checks.
  double normTolerance{1e-9};
  /// log2 of the number of entries per compute-table kind.
  std::size_t computeTableLog2{16};
  /// Dead-node threshold above which collectGarbage() actually sweeps.
  std::size_t gcDeadThreshold{64 * 1024};
};

struct PackageStats {
  std::size_t liveNodes{0};
  std::size_t peakNodes{0};
  std::size_t nodesCreated{0};
  std::size_t deadNodes{0};
  std::size_t gcRuns{0};
  std::size_t computeLookups{0};
  std::size_t computeHits{0};
};

namespace detail {

/// Interns nonnegative magnitudes with tolerance-based lookup so that
/// repeated constants (0, 1, 1/sqrt(2), ...) unify to one representative.
class ValueTable {
public:
  explicit ValueTable(double tol);

  /// Canonical representative of v. Magnitudes below the tolerance return
  /// exactly +0.0; signs are preserved otherwise.
  double lookup(double v);

private:
  double tolerance;
  std::unordered_map<std::int64_t, std::vector<double>> buckets;
};

/// Hash-consing table; nodes chain through their `next` pointer. One
/// bucket array per variable.
template <typename NodeT> class UniqueTable {
public:
  NodeT* lookup(Qubit var, const std::array<Edge<NodeT>, NodeT::ARITY>& key);
  void insert(NodeT* node);
  /// Unlinks all nodes with ref == 0 and hands them to `recycle`.
  template <typename RecycleFn> std::size_t sweep(RecycleFn&& recycle);

private:
  void grow(Qubit var);
  struct VarTable {
    std::vector<NodeT*> buckets = std::vector<NodeT*>(1024, nullptr);
    std::size_t entries{0};
  };
  std::vector<VarTable> tables;
};

/// Direct-mapped memoization cache with overwrite-on-collision.
template <typename Key, typename Value> class ComputeTable {
public:
  void resize(std::size_t log2Size) {
    entries.assign(std::size_t{1} << log2Size, {});
  }
  void clear() {
    for (auto& e : entries) {
      e.valid = false;
    }
  }
  const Value* find(const Key& key, std::size_t hash, PackageStats& stats) {
    ++stats.computeLookups;
    const auto& e = entries[hash & (entries.size() - 1)];
    if (e.valid && e.key == key) {
      ++stats.computeHits;
      return &e.value;
    }
    return nullptr;
  }
  void put(const Key& key, std::size_t hash, const Value& value) {
    auto& e = entries[hash & (entries.size() - 1)];
    e.key = key;
    e.value = value;
    e.valid = true;
  }

private:
  struct Entry {
    Key key{};
    Value value{};
    bool valid{false};
  };
  std::vector<Entry> entries;
};

} // namespace detail

/// Canonical, hash-consed decision-diagram package for quantum state
/// vectors and operators, with memoized arithmetic and reference-counted
/// garbage collection.
///
/// A package instance is single-owner: it must not be mutated from two
/// threads, and nodes must never be shared between packages. Distinct
/// instances are fully independent.
///
/// Garbage collection only runs when collectGarbage() is called; callers
/// must hold references (incRef) on every DD they want to survive a
/// collection and may only collect between top-level operations.
class Package {
public:
  explicit Package(PackageConfig cfg = {});
  Package(const Package&) = delete;
  Package& operator=(const Package&) = delete;

  // --- low-level node construction -------------------------------------

  /// Builds the normalized, hash-consed node for `var` with the given
  /// children and returns the edge pointing to it. The pivot child (largest
  /// weight magnitude, ties to the lowest index) ends up with weight
  /// exactly 1; its weight is returned on the edge. All-zero children
  /// collapse to the canonical zero edge.
  VectorEdge makeVectorNode(Qubit var, std::array<VectorEdge, 2> children);
  MatrixEdge makeMatrixNode(Qubit var, std::array<MatrixEdge, 4> children);

  static constexpr VectorEdge vZero() { return {}; }
  static constexpr MatrixEdge mZero() { return {}; }
  static constexpr VectorEdge vOne() { return {Complex{1.0, 0.0}, nullptr}; }
  static constexpr MatrixEdge mOne() { return {Complex{1.0, 0.0}, nullptr}; }

  // --- whole-DD constructors --------------------------------------------

  VectorDD makeZeroState(std::size_t numQubits);
  VectorDD makeBasisState(std::size_t numQubits, std::uint64_t basisIndex);
  MatrixDD makeIdentity(std::size_t numQubits);

  /// Lifts a 1- or 2-qubit gate to an n-qubit operator (identity padding,
  /// controls expanded). Throws on non-unitary kinds, duplicate operands,
  /// or operands outside [0, n).
  MatrixDD makeGateMatrix(const qc::Gate& gate, std::size_t numQubits);

  // --- arithmetic ---------------------------------------------------------

  VectorDD add(const VectorDD& a, const VectorDD& b);
  MatrixDD add(const MatrixDD& a, const MatrixDD& b);
  VectorDD multiply(const MatrixDD& m, const VectorDD& v);
  MatrixDD multiply(const MatrixDD& a, const MatrixDD& b);
  MatrixDD conjugateTranspose(const MatrixDD& m);

  // --- queries -------------------------------------------------------------

  /// Amplitude of one basis state; `bits` holds one character per qubit,
  /// qubit numQubits-1 leftmost.
  Complex getAmplitude(const VectorDD& v, std::string_view bits) const;
  Complex getMatrixEntry(const MatrixDD& m, std::uint64_t row,
                         std::uint64_t col) const;
  Complex innerProduct(const VectorDD& a, const VectorDD& b);
  double fidelity(const VectorDD& a, const VectorDD& b);
  double norm2(const VectorDD& v);

  /// Number of distinct non-terminal nodes reachable from the root.
  static std::size_t nodeCount(const VectorDD& v);
  static std::size_t nodeCount(const MatrixDD& m);

  // --- reference counting & garbage collection ---------------------------

  void incRef(const VectorDD& v) { incRef(v.root); }
  void decRef(const VectorDD& v) { decRef(v.root); }
  void incRef(const MatrixDD& m) { incRef(m.root); }
  void decRef(const MatrixDD& m) { decRef(m.root); }
  void incRef(const VectorEdge& e);
  void decRef(const VectorEdge& e);
  void incRef(const MatrixEdge& e);
  void decRef(const MatrixEdge& e);

  /// Sweeps unreferenced nodes once the dead-node threshold is reached
  /// (always when forced) and clears all compute tables.
  void collectGarbage(bool force = false);

  /// Drops all memoized results; never changes operation results.
  void clearComputeTables();

  [[nodiscard]] const PackageStats& stats() const { return statistics; }
  [[nodiscard]] std::size_t liveNodes() const { return statistics.liveNodes; }
  [[nodiscard]] std::size_t peakNodes() const { return statistics.peakNodes; }
  [[nodiscard]] const PackageConfig& config() const { return configuration; }

  /// Canonical representative for a complex value (value-table snap).
  Complex intern(const Complex& c);

private:
  template <typename NodeT>
  Edge<NodeT> makeNode(Qubit var,
                       std::array<Edge<NodeT>, NodeT::ARITY> children);

  VectorEdge addEdges(const VectorEdge& a, const VectorEdge& b);
  MatrixEdge addEdges(const MatrixEdge& a, const MatrixEdge& b);
  VectorEdge multiplyEdges(const MatrixEdge& m, const VectorEdge& v);
  MatrixEdge multiplyEdges(const MatrixEdge& a, const MatrixEdge& b);
  MatrixEdge conjugateTransposeEdge(const MatrixEdge& m);
  Complex innerProductEdges(const VectorEdge& a, const VectorEdge& b,
                            std::size_t level);

  /// Operator that is a tensor product of single-qubit factors; factors
  /// default to the identity.
  MatrixEdge makeFactorChain(
      std::size_t numQubits,
      const std::unordered_map<Qubit, qc::Mat2>& factors);

  VectorNode* allocVectorNode();
  MatrixNode* allocMatrixNode();

  template <typename EdgeT> void incRefImpl(const EdgeT& e);
  template <typename EdgeT> void decRefImpl(const EdgeT& e);

  PackageConfig configuration;
  PackageStats statistics;

  detail::ValueTable values;
  detail::UniqueTable<VectorNode> vUnique;
  detail::UniqueTable<MatrixNode> mUnique;

  std::deque<VectorNode> vArena;
  std::deque<MatrixNode> mArena;
  VectorNode* vFree{nullptr};
  MatrixNode* mFree{nullptr};

  struct BinaryVKey {
    VectorEdge a, b;
    bool operator==(const BinaryVKey&) const = default;
  };
  struct BinaryMKey {
    MatrixEdge a, b;
    bool operator==(const BinaryMKey&) const = default;
  };
  struct NodePairKey {
    const void* a{nullptr};
    const void* b{nullptr};
    bool operator==(const NodePairKey&) const = default;
  };

  detail::ComputeTable<BinaryVKey, VectorEdge> addVTable;
  detail::ComputeTable<BinaryMKey, MatrixEdge> addMTable;
  detail::ComputeTable<NodePairKey, VectorEdge> multMVTable;
  detail::ComputeTable<NodePairKey, MatrixEdge> multMMTable;
  detail::ComputeTable<const void*, MatrixEdge> transposeTable;
  detail::ComputeTable<NodePairKey, Complex> innerTable;
};

} // namespace dd
