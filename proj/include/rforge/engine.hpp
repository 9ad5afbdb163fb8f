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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rforge/degree.hpp"
#include "rforge/formula.hpp"
#include "rforge/logic.hpp"
#include "rforge/premises.hpp"
#include "rforge/substitution.hpp"

namespace rforge {

using RecordId = std::uint64_t;

// Name under which the built-in universal instantiation rule is recorded.
inline constexpr std::string_view kUniversalInstantiation = "universal-instantiation";

enum class Origin : std::uint8_t { Axiom, Premise, Rule };

struct Derivation {
  Origin origin = Origin::Axiom;
  // Axiom name, premise label or rule name.
  std::string source;
  std::vector<RecordId> parents;
  // Rule applications only: the unifier over the renamed-apart rule and
  // parents (or the instantiating term for universal instantiation).
  Substitution substitution;
};

struct RecordFlags {
  bool is_premise = false;
  bool strong_relevance = false;
  // Empty for formulas that are not conditionals.
  std::optional<bool> variable_sharing;
  bool logical_instance = false;
};

struct TheoremRecord {
  RecordId id = 0;
  // Canonical form and its rendering.
  Formula formula;
  std::string text;
  Derivation derivation;
  int depth = 0;
  DegreeVector degrees;
  RecordFlags flags;
  // Max =>-degree over the rule results of this derivation (0 for seeds).
  int derivation_j = 0;
  bool has_premise_ancestor = false;
};

struct DerivationLimits {
  int max_depth = 10;
  std::uint64_t max_records = 1'000'000;
  std::uint32_t max_formula_size = 80;
  double time_budget_seconds = 300.0;

  friend bool operator==(const DerivationLimits&, const DerivationLimits&) = default;
};

// Throws std::invalid_argument unless every limit is positive.
void validate_limits(const DerivationLimits& limits);

enum class SaturationStatus : std::uint8_t { Fixpoint, DepthLimit, RecordLimit, TimeLimit, Stopped };

std::string_view to_string(SaturationStatus s);

// A degree-bounded fragment of a logic: schematic theorems, pairwise
// non-variant. `records` holds every record ever assigned an id, in id
// order; records listed in `retired` were later subsumed by a more general
// record and are kept only so that derivations through them still replay.
struct Fragment {
  std::string logic;
  DegreeVector caps;
  DerivationLimits limits;
  bool subsumption = true;
  bool complete = false;
  SaturationStatus status = SaturationStatus::Fixpoint;
  std::vector<TheoremRecord> records;
  std::vector<RecordId> retired;

  bool is_retired(RecordId id) const;
  // Non-retired records in id order.
  std::vector<const TheoremRecord*> members() const;
  const TheoremRecord* find(RecordId id) const;
  // One past the largest id.
  RecordId id_bound() const;
};

struct RuleCandidate {
  Formula conclusion;
  Substitution substitution;
};

// Renames the rule and each parent apart, then unifies every premise with its
// parent simultaneously. Condensed-detachment style: at most one most general
// result per parent tuple.
std::vector<RuleCandidate> apply_rule(const InferenceRule& rule, const std::vector<Formula>& parents);

// Scope tags used for renaming apart: parent i gets i + 1, rule atoms get kRuleScope.
inline constexpr std::uint32_t kRuleScope = 1u << 20;

struct FragmentOptions {
  bool subsumption = true;
  int workers = 1;
};

// Saturates the logic's axioms under its rules, keeping only results within
// `caps` (per connective) and `limits.max_formula_size`.
Fragment generate_fragment(const LogicSystem& logic, const DegreeVector& caps,
                           const DerivationLimits& limits, const FragmentOptions& options = {});

struct UniversalInstantiationOptions {
  bool enabled = true;
  int term_depth = 2;
};

struct DeriveOptions {
  DegreeVector caps;
  DerivationLimits limits;
  bool strong_relevance_filter = false;
  bool variable_sharing_filter = false;
  UniversalInstantiationOptions universal_instantiation;
  int workers = 1;
  // Called for every new record; returning true ends saturation early.
  std::function<bool(const TheoremRecord&)> stop;
};

struct RejectionCounts {
  std::uint64_t degree_cap = 0;
  std::uint64_t formula_size = 0;
  std::uint64_t strong_relevance = 0;
  std::uint64_t variable_sharing = 0;
};

struct DerivedSet {
  // Premises followed by rule results, in id order. Fragment records keep
  // their fragment ids and are not repeated here.
  std::vector<TheoremRecord> records;
  RecordId first_id = 0;
  bool complete = false;
  SaturationStatus status = SaturationStatus::Fixpoint;
  RejectionCounts rejected;
  int depth_reached = 0;
  // Ground terms used for universal instantiation.
  std::vector<Term> herbrand_terms;

  const TheoremRecord* find(RecordId id) const;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Saturates premises together with fragment records. Premises and fragment
// records are exempt from the caps; only rule results are capped. Throws
// PreconditionError for an empty or non-closed premise set.
DerivedSet derive_from_premises(const Fragment& fragment, const std::vector<InferenceRule>& rules,
                                const PremiseSet& premises, const DeriveOptions& options);

// Ground terms of the premises closed under their function symbols up to
// `term_depth`, in a deterministic order.
std::vector<Term> herbrand_terms(const PremiseSet& premises, int term_depth);

// Whether a closed `target` is in the derived theory: an exact record, an
// instance of a fragment member within the fragment caps, or an instance of
// a record through connective-free bindings (which leave every degree on
// the derivation unchanged).
const TheoremRecord* find_derivation_of(const Formula& target, const Fragment& fragment,
                                        const DerivedSet& derived);
// Single-record form of the same test; `in_fragment` selects the rule.
bool covers(const TheoremRecord& record, const Formula& target, bool in_fragment, const DegreeVector& fragment_caps);

struct DeducibilityResult {
  int j = 0;
  int depth = 0;
};

struct DeducibilityOptions {
  // Caps for connectives other than =>; the => entry is overwritten per j.
  DegreeVector base_caps;
  DerivationLimits limits;
  int max_j = 6;
  UniversalInstantiationOptions universal_instantiation;
};

// Least j such that target is j-deducible, found by iterative deepening over
// j and, within a j, breadth-first over depth. Empty when not found within
// the limits.
std::optional<DeducibilityResult> deducibility_degree(const Formula& target, const PremiseSet& premises,
                                                      const Fragment& fragment,
                                                      const std::vector<InferenceRule>& rules,
                                                      const DeducibilityOptions& options);

// Replays one derivation step against the parents' formulas. `rules` must
// contain the named rule; axioms are checked against `logic`.
bool replay_step(const TheoremRecord& record, const std::vector<const TheoremRecord*>& parents,
                 const LogicSystem& logic, const std::vector<InferenceRule>& rules,
                 const PremiseSet* premises = nullptr);

}  // namespace rforge
