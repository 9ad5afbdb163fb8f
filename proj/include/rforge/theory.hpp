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
#include <string>
#include <vector>

#include "rforge/engine.hpp"

namespace rforge {

// A and ~A both in the premise set.
struct DirectWitness {
  Formula formula;  // A
  std::string positive_label;
  std::string negative_label;
};

std::optional<DirectWitness> check_direct_inconsistency(const PremiseSet& premises);

enum class ConsistencyKind : std::uint8_t { DirectlyInconsistent, IndirectlyInconsistent, NoneFound };

std::string_view to_string(ConsistencyKind k);

struct ConsistencyVerdict {
  ConsistencyKind kind = ConsistencyKind::NoneFound;
  // Present for both inconsistent kinds.
  std::optional<Formula> witness;
  // Direct: premise labels of A and ~A.
  std::string positive_label;
  std::string negative_label;
  // Indirect: records establishing A and ~A. A record may be a fragment
  // schema of which the formula is an instance.
  RecordId positive_record = 0;
  RecordId negative_record = 0;
  // NoneFound: how far the search went.
  DerivationLimits limits;
  SaturationStatus status = SaturationStatus::Fixpoint;
  int depth_reached = 0;
};

// Direct inconsistency takes precedence; otherwise scans the derived set
// (together with instances of fragment members) for a complementary pair.
ConsistencyVerdict check_derived_inconsistency(const Fragment& fragment, const DerivedSet& derived,
                                               const PremiseSet& premises, const DerivationLimits& limits);

// Re-checks a verdict's witness structurally against its sources.
bool verify_witness(const ConsistencyVerdict& verdict, const Fragment& fragment, const DerivedSet& derived,
                    const PremiseSet& premises);

struct FormalTheory {
  std::string logic;
  DegreeVector fragment_caps;
  std::size_t premise_count = 0;
  std::vector<RecordId> empirical;
  std::vector<RecordId> logical_instances;
  ConsistencyVerdict consistency;
};

inline constexpr std::string_view kLogicalPartCaveat =
    "logical-part membership is approximated by matching against the bounded fragment; "
    "an empirical record may still be a theorem of the full logic";

FormalTheory partition_theory(const Fragment& fragment, const DerivedSet& derived, const PremiseSet& premises,
                              const DerivationLimits& limits);

struct ProbeResult {
  Formula probe;
  bool derived = false;
  // Record covering the probe, when derived.
  std::optional<RecordId> record;
};

struct ExplosionReport {
  std::vector<ProbeResult> probes;
  bool paraconsistent_evidence = false;
  SaturationStatus status = SaturationStatus::Fixpoint;
  int depth_reached = 0;
  DerivedSet derived;
};

// Saturates an inconsistent premise set and reports which probes follow.
// Throws PreconditionError when a probe shares a symbol with the premises.
ExplosionReport explosion_probe(const Fragment& fragment, const std::vector<InferenceRule>& rules,
                                const PremiseSet& premises, const std::vector<Formula>& probes,
                                const DeriveOptions& options);

}  // namespace rforge
