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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rforge/degree.hpp"
#include "rforge/formula.hpp"

namespace rforge {

struct AxiomSchema {
  std::string name;
  Formula formula;
  // A concrete axiom has no schema atoms and must say so explicitly.
  bool concrete = false;
};

struct InferenceRule {
  std::string name;
  std::vector<Formula> premises;
  Formula conclusion;
};

struct LogicSystem {
  std::string name;
  std::string description;
  std::vector<AxiomSchema> axioms;
  std::vector<InferenceRule> rules;
  std::vector<Connective> signature;

  bool allows(Connective c) const;
  const InferenceRule* find_rule(std::string_view rule_name) const;
  const AxiomSchema* find_axiom(std::string_view axiom_name) const;
};

// Logic-file problems: schema violations, duplicate names, parse failures
// (message carries the axiom or rule name).
class LogicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses a logic document (JSON). Unknown fields are rejected.
LogicSystem load_logic(std::string_view document);
LogicSystem load_logic_file(const std::string& path);

// Inverse of load_logic; deterministic output.
std::string dump_logic(const LogicSystem& logic);

struct AxiomAudit {
  std::string name;
  bool strong_relevance = false;
  // Empty when the axiom is not a conditional.
  std::optional<bool> variable_sharing;
  DegreeVector degrees;
};

struct LogicReport {
  std::string logic;
  std::vector<AxiomAudit> axioms;
  // Names of axioms failing strong relevance. Warnings only: non-relevant
  // logics are legitimate inputs.
  std::vector<std::string> warnings;
};

LogicReport validate_logic(const LogicSystem& logic);
std::string to_json(const LogicReport& report);

// Rule templates in the same form users write them.
InferenceRule modus_ponens();
InferenceRule adjunction();

// Bundled illustrative presets: "srl-entailment-mini", "srl-entailment-ext",
// "cml-mini".
std::vector<std::string> preset_names();
std::string_view preset_document(std::string_view name);
LogicSystem preset_logic(std::string_view name);

}  // namespace rforge
