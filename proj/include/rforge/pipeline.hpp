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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rforge/engine.hpp"
#include "rforge/theory.hpp"

namespace rforge {

// Process exit codes shared by the CLI subcommands.
enum class ExitCode : int {
  Ok = 0,
  Usage = 1,  // bad arguments or IO failure
  Parse = 2,  // logic, premise, manifest, formula or cache syntax
  Truncated = 3,
  Precondition = 4,
  Duplicates = 5,
  ReplayFailure = 6,
  CheckFailed = 7,  // `check`: a requested relevance property does not hold
};

struct OutputFilters {
  bool strong_relevance = false;
  bool variable_sharing = false;
  bool exclude_logical_instances = false;
};

enum class CorpusFormat : std::uint8_t { Jsonl, Text };

struct PipelineManifest {
  // "preset:NAME" selects a bundled logic.
  std::string logic;
  std::filesystem::path premises;
  std::filesystem::path output;
  std::optional<std::filesystem::path> fragment_cache;
  DegreeVector fragment_caps;
  DerivationLimits fragment_limits;
  DegreeVector empirical_caps;
  DerivationLimits empirical_limits;
  OutputFilters filters;
  UniversalInstantiationOptions universal_instantiation;
  CorpusFormat format = CorpusFormat::Jsonl;
  int workers = 1;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Relative paths are resolved against `base`.
PipelineManifest parse_manifest(std::string_view document, const std::filesystem::path& base);
PipelineManifest load_manifest(const std::filesystem::path& path);

LogicSystem load_logic_spec(const std::string& spec);

// One JSON object per record, keys in a fixed order.
std::string corpus_line(const TheoremRecord& record);

// Records in id order; jsonl carries every field, text only the formula.
void write_corpus(const std::vector<const TheoremRecord*>& records, CorpusFormat format, std::ostream& out);
void export_corpus(const std::vector<const TheoremRecord*>& records, CorpusFormat format,
                   const std::filesystem::path& path);

// Records of `derived` that survive the output filters. The strong-relevance
// and variable-sharing filters already pruned rule results during
// derivation; premises are always kept as inputs.
std::vector<const TheoremRecord*> select_output(const DerivedSet& derived, const OutputFilters& filters);

struct CorpusStats {
  std::uint64_t total = 0;
  std::uint64_t premises = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t strong_relevance = 0;
  std::uint64_t variable_sharing_true = 0;
  std::uint64_t variable_sharing_false = 0;
  std::uint64_t variable_sharing_na = 0;
  std::uint64_t logical_instances = 0;
  // connective name -> degree -> count
  std::map<std::string, std::map<int, std::uint64_t>> histogram;
  std::map<int, std::uint64_t> depth_histogram;
  std::map<std::string, std::uint64_t> rules;
};

class CorpusFormatError : public std::runtime_error {
 public:
  CorpusFormatError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

CorpusStats corpus_stats(std::istream& in);
CorpusStats corpus_stats(const std::filesystem::path& path);
std::string to_json(const CorpusStats& stats);

struct CorpusReplay {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  // Entries whose parent is neither in the corpus nor in the fragment
  // (possible only when the corpus was filtered at output).
  std::uint64_t missing_parents = 0;
  std::vector<RecordId> failed_ids;  // first few
};

// Replays every jsonl entry against the fragment, the logic's rules and the
// premises: formula, depth, degrees and the derivation step.
CorpusReplay replay_corpus(std::istream& in, const Fragment& fragment, const LogicSystem& logic,
                           const PremiseSet& premises);

struct PipelineResult {
  Fragment fragment;
  bool fragment_from_cache = false;
  DerivedSet derived;
  FormalTheory theory;
  std::uint64_t emitted = 0;
  bool truncated = false;
  double wall_seconds = 0;
  std::filesystem::path corpus_path;
  std::filesystem::path stats_path;
  std::string stats_json;
};

// Runs both stages and writes the corpus and `<output>.stats.json`.
// Throws on parse and precondition failures; truncation is reported in the
// result and the stats, never raised.
PipelineResult run_pipeline(const PipelineManifest& manifest);

// Stats document for a finished derivation (shared by `pipeline run` and `derive`).
std::string run_stats_json(const std::string& logic, const Fragment& fragment, bool fragment_from_cache,
                           const DeriveOptions& derive, const DerivedSet& derived, const FormalTheory& theory,
                           const std::vector<const TheoremRecord*>& emitted, const OutputFilters& filters,
                           const std::filesystem::path& corpus, double wall_seconds);

}  // namespace rforge
