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
#include <string_view>

#include "rforge/formula.hpp"

namespace rforge {

// Thrown for malformed formula text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Arities seen so far for predicate and function names. Share one instance
// across all formulas of a problem to get cross-formula arity checking.
class ArityTable {
 public:
  // Throws std::invalid_argument on mismatch with an earlier use.
  void note_predicate(Symbol name, std::size_t arity);
  void note_function(Symbol name, std::size_t arity);

 private:
  std::map<Symbol, std::size_t> predicates_;
  std::map<Symbol, std::size_t> functions_;
};

// Grammar (ASCII):
//   formula := or_expr ("=>" formula)?
//   or_expr := and_expr ("|" and_expr)*
//   and_expr := unary ("&" unary)*
//   unary   := "~" unary | ("forall" | "exists") IDENT "." formula | atom | "(" formula ")"
//   atom    := UPPER_IDENT | LOWER_IDENT ("(" term ("," term)* ")")?
//   term    := LOWER_IDENT ("(" term ("," term)* ")")?
// A quantifier body extends as far to the right as possible.
Formula parse_formula(std::string_view text);
Formula parse_formula(std::string_view text, ArityTable& arities);

struct RenderOptions {
  // Print => & | ~ as the Unicode connectives; the output is then not re-parseable.
  bool unicode = false;
};

// Canonical text: minimal parentheses, => right-associative, & and |
// left-associative, one space around binary connectives.
std::string render_formula(const Formula& f, RenderOptions options = {});
std::string render_term(const Term& t);

}  // namespace rforge
