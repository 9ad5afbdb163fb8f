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

#include <map>
#include <stdexcept>
#include <string>

#include "rforge/formula.hpp"

namespace rforge {

struct Occurrence {
  bool antecedent_part = false;
  bool consequent_part = false;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Keyed by the propositional symbol's text. Propositional symbols are schema
// atoms and nullary predicates.
using OccurrenceReport = std::map<std::string, Occurrence>;

// Signed-occurrence marking. The whole formula is a consequent part; inside
// A => B the antecedent A takes the opposite role of the conditional and B
// keeps it; ~ flips its child; & | and quantifiers preserve the role.
OccurrenceReport occurrence_report(const Formula& f);

// Every propositional symbol occurs at least once as an antecedent part and
// at least once as a consequent part. Vacuously true without symbols.
bool strong_relevance_holds(const Formula& f);

class NotAConditional : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Antecedent and consequent of the top conditional (under any quantifier
// prefix) share a propositional symbol. Throws NotAConditional otherwise.
bool variable_sharing_holds(const Formula& f);

}  // namespace rforge
