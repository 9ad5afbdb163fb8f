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

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "rforge/formula.hpp"

namespace rforge {

enum class Connective : std::uint8_t { Entail = 0, And = 1, Or = 2, Not = 3 };

inline constexpr std::array<Connective, 4> kConnectives = {Connective::Entail, Connective::And,
                                                           Connective::Or, Connective::Not};

// "=>", "&", "|", "~"
std::string_view connective_name(Connective c) noexcept;
std::optional<Connective> parse_connective(std::string_view name) noexcept;

// Degree per connective. An absent connective has degree 0, so a DegreeVector
// used as a cap bounds every connective, defaulting to 0.
class DegreeVector {
 public:
  DegreeVector() = default;
  DegreeVector(std::initializer_list<std::pair<Connective, int>> entries);

  int operator[](Connective c) const noexcept { return values_[static_cast<std::size_t>(c)]; }
  int& operator[](Connective c) noexcept { return values_[static_cast<std::size_t>(c)]; }

  // Componentwise <=.
  bool within(const DegreeVector& caps) const noexcept;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::array<int, 4> values_{};
};

// Parses "=>:2,&:1"; whitespace is ignored. Throws std::invalid_argument.
DegreeVector parse_caps(std::string_view text);
// Always lists all four connectives: "=>:2,&:0,|:0,~:0".
std::string format_caps(const DegreeVector& caps);

// Nesting degree of `c` in `f`: 0 without occurrences, one more than the
// children's maximum at a node of connective `c`, the children's maximum at
// any other connective, and transparent under quantifiers.
int connective_degree(const Formula& f, Connective c);
DegreeVector degree_vector(const Formula& f);

enum class DegreeClass : std::uint8_t { ZeroDegree, FirstDegreeConditional, FirstDegree, KthDegree };

struct Classification {
  DegreeClass kind;
  // connective_degree(f, Entail); meaningful for every kind.
  int degree;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify_formula(const Formula& f);
std::string to_string(const Classification& c);

// Structural tests from the classical first-degree definitions, exposed for
// cross-checking against the degree recursion.
bool is_zero_degree(const Formula& f);
bool is_first_degree_conditional(const Formula& f);
bool is_first_degree(const Formula& f);

}  // namespace rforge
