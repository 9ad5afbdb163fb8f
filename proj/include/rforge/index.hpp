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
#include <vector>

#include "rforge/formula.hpp"

namespace rforge {

// Discrimination tree over the preorder symbol sequence of formulas. Schema
// atoms and individual variables become wildcards. Retrieval is a filter:
// it never misses a partner but may return false positives, so callers run
// the real unifier or matcher on every hit.
class FormulaIndex {
 public:
  FormulaIndex();

  void insert(const Formula& f, std::uint32_t item);

  // Items whose formula may unify with `query` (wildcards on both sides).
  void unifiable(const Formula& query, std::vector<std::uint32_t>& out) const;
  // Items whose formula may match onto `query` (query wildcards are rigid).
  void generalizations(const Formula& query, std::vector<std::uint32_t>& out) const;
  // Items whose formula `query` may match onto (stored wildcards are rigid).
  void instances(const Formula& query, std::vector<std::uint32_t>& out) const;

  std::size_t size() const noexcept { return size_; }

 private:
  struct Key {
    std::uint8_t tag = 0;  // 0 = wildcard
    std::uint32_t arity = 0;
    Symbol symbol;

    bool wildcard() const noexcept { return tag == 0; }
    friend bool operator==(const Key&, const Key&) = default;
  };

  struct Node {
    std::vector<std::pair<Key, std::uint32_t>> edges;
    std::vector<std::uint32_t> items;
  };

  enum class Mode { Unifiable, Generalizations, Instances };

  static void flatten(const Formula& f, std::vector<Key>& out);
  static void flatten(const Term& t, std::vector<Key>& out);

  void retrieve(const Formula& query, Mode mode, std::vector<std::uint32_t>& out) const;

  struct Query {
    std::vector<Key> keys;
    std::vector<std::uint32_t> end;  // index one past the subterm starting at i
  };

  void visit(std::uint32_t node, std::size_t pos, const Query& q, Mode mode,
             std::vector<std::uint32_t>& out) const;
  void skip(std::uint32_t node, std::uint32_t pending, std::size_t resume, const Query& q, Mode mode,
            std::vector<std::uint32_t>& out) const;

  std::vector<Node> nodes_;
  std::size_t size_ = 0;
};

}  // namespace rforge
