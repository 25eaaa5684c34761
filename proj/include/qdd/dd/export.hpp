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

#include "qdd/dd/package.hpp"

#include <iosfwd>

namespace dd {

/// Debug dump of a DD as a DOT graph. Nodes are labeled with a traversal
/// id and their variable; edges carry weights with 6 significant digits.
void dumpDot(const VectorDD& v, std::ostream& out);
void dumpDot(const MatrixDD& m, std::ostream& out);

} // namespace dd
