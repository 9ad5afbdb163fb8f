// Copyright 2026 The rforge Authors
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

#include <string>

#include "rforge/formula.hpp"

namespace rforge {

// Renames schema atoms to A1, A2, ... in order of first preorder occurrence
// (all scope tags reset to 0) and bound variables to x1, x2, ... in preorder
// of their binders. Predicates, constants and functions are never renamed.
// Idempotent.
Formula canonicalize(const Formula& f);

// render_formula(canonicalize(f)): the dedup key for variant-equivalence.
std::string canonical_text(const Formula& f);

// Equal up to renaming of schema atoms and bound variables.
bool is_variant(const Formula& a, const Formula& b);

}  // namespace rforge
