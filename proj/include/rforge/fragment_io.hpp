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
#include <stdexcept>
#include <string>

#include "rforge/engine.hpp"

namespace rforge {

class FragmentFormatError : public std::runtime_error {
 public:
  FragmentFormatError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A record whose derivation does not replay; the cache is corrupt.
class FragmentReplayError : public std::runtime_error {
 public:
  explicit FragmentReplayError(RecordId id)
      : std::runtime_error("fragment record " + std::to_string(id) + " does not replay"), id_(id) {}
  RecordId id() const noexcept { return id_; }

 private:
  RecordId id_;
};

// Line-oriented cache format: '#' header lines, then one tab-separated
// record per line (id, depth, origin, parents, canonical formula).
void write_fragment(const Fragment& fragment, std::ostream& out);
// Parses and replays every record against `logic`. Throws
// FragmentFormatError, FragmentReplayError, or PreconditionError when the cache was
// produced for a different logic.
Fragment read_fragment(std::istream& in, const LogicSystem& logic);

void save_fragment(const Fragment& fragment, const std::filesystem::path& path);
Fragment load_fragment(const std::filesystem::path& path, const LogicSystem& logic);

}  // namespace rforge
