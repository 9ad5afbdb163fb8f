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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rforge/formula.hpp"

namespace rforge {

struct Premise {
  std::string label;
  Formula formula;
  std::string source;
  int line = 0;
};

// Labeled closed formulas, in file order.
struct PremiseSet {
  std::vector<Premise> premises;

  bool empty() const noexcept { return premises.empty(); }
  std::size_t size() const noexcept { return premises.size(); }
};

class PremiseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One `label: formula` per line; blank lines and lines starting with '#' are
// skipped. Arity is checked across the whole file. Throws PremiseError with
// source:line context. An empty file yields an empty set.
PremiseSet parse_premises(std::string_view text, const std::string& source = "<premises>");
PremiseSet load_premises_file(const std::string& path);

}  // namespace rforge
