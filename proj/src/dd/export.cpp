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

#include "qdd/dd/export.hpp"

#include <cstdio>
#include <ostream>
#include <unordered_map>

namespace dd {

namespace {

std::string formatWeight(const Complex& w) {
  char buf[64];
  if (w.im == 0.0) {
    std::snprintf(buf, sizeof(buf), "%.6g", w.re);
  } else {
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", w.re, w.im);
  }
  return buf;
}

template <typename NodeT>
std::size_t dumpNode(const NodeT* node,
                     std::unordered_map<const void*, std::size_t>& ids,
                     std::ostream& out) {
  if (node == nullptr) {
    return 0; // terminal
  }
  if (const auto it = ids.find(node); it != ids.end()) {
    return it->second;
  }
  const auto id = ids.size() + 1;
  ids.emplace(node, id);
  out << "  n" << id << " [label=\"q" << node->var << "\"];\n";
  for (std::size_t i = 0; i < NodeT::ARITY; ++i) {
    const auto& child = node->children[i];
    if (child.isZero()) {
      continue;
    }
    const auto childId = dumpNode(child.node, ids, out);
    out << "  n" << id << " -> n" << childId << " [label=\"" << i << ": "
        << formatWeight(child.weight) << "\"];\n";
  }
  return id;
}

template <typename EdgeT>
void dumpEdge(const EdgeT& root, std::ostream& out) {
  out << "digraph dd {\n";
  out << "  n0 [label=\"1\", shape=box];\n";
  std::unordered_map<const void*, std::size_t> ids;
  out << "  root [shape=point];\n";
  // emit nodes first so the root edge can reference them
  const auto rootId = dumpNode(root.node, ids, out);
  out << "  root -> n" << rootId << " [label=\"" << formatWeight(root.weight)
      << "\"];\n";
  out << "}\n";
}

} // namespace

void dumpDot(const VectorDD& v, std::ostream& out) { dumpEdge(v.root, out); }
void dumpDot(const MatrixDD& m, std::ostream& out) { dumpEdge(m.root, out); }

} // namespace dd
