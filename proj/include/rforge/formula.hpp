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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rforge/symbol.hpp"

namespace rforge {

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

enum class TermKind : std::uint8_t { Variable, Constant, Function };

struct TermNode;

// Immutable first-order term. Copies share structure.
class Term {
 public:
  TermKind kind() const noexcept;
  Symbol name() const noexcept;
  std::span<const Term> args() const noexcept;
  std::size_t hash() const noexcept;
  // Nesting depth: 0 for variables and constants.
  int depth() const noexcept;
  bool is_ground() const noexcept;

  const TermNode* get() const noexcept { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  friend Term make_term(TermKind, Symbol, std::vector<Term>);
  std::shared_ptr<const TermNode> node_;
};

Term variable(std::string_view name);
Term variable(Symbol name);
Term constant(std::string_view name);
Term constant(Symbol name);
Term function(std::string_view name, std::vector<Term> args);
Term function(Symbol name, std::vector<Term> args);
Term make_term(TermKind kind, Symbol name, std::vector<Term> args);

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

enum class FormulaKind : std::uint8_t { SchemaAtom, Predicate, Not, And, Or, Entail, Quantified };

enum class Quantifier : std::uint8_t { Forall, Exists };

struct FormulaNode;

// Immutable formula AST. Structural equality is the identity used everywhere.
//
// Schema atoms carry a scope tag besides their name. Tag 0 is the user-visible
// namespace; the engine uses nonzero tags to rename formulas apart before
// unification without allocating fresh names.
class Formula {
 public:
  FormulaKind kind() const noexcept;

  // SchemaAtom / Predicate name, or the bound variable of a Quantified node.
  Symbol name() const noexcept;
  std::uint32_t scope() const noexcept;
  std::span<const Term> terms() const noexcept;
  Quantifier quantifier() const noexcept;

  // Not and Quantified: child(); binary connectives: left() / right().
  const Formula& child() const noexcept;
  const Formula& left() const noexcept;
  const Formula& right() const noexcept;

  // Node count, terms excluded.
  std::uint32_t size() const noexcept;
  std::size_t hash() const noexcept;

  bool is_binary() const noexcept;
  bool is_schema_atom() const noexcept { return kind() == FormulaKind::SchemaAtom; }
  bool is_entail() const noexcept { return kind() == FormulaKind::Entail; }

  const FormulaNode* get() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  friend Formula make_formula(FormulaNode&&);
  std::shared_ptr<const FormulaNode> node_;
};

Formula schema_atom(std::string_view name, std::uint32_t scope = 0);
Formula schema_atom(Symbol name, std::uint32_t scope = 0);
Formula predicate(std::string_view name, std::vector<Term> terms = {});
Formula predicate(Symbol name, std::vector<Term> terms = {});
Formula negation(Formula child);
Formula conjunction(Formula left, Formula right);
Formula disjunction(Formula left, Formula right);
Formula entailment(Formula antecedent, Formula consequent);
Formula quantified(Quantifier q, Symbol var, Formula body);
Formula forall(std::string_view var, Formula body);
Formula exists(std::string_view var, Formula body);

// Rebuilds a Not/And/Or/Entail/Quantified node of the same shape as `f` with
// new children. Leaves are returned unchanged.
Formula with_children(const Formula& f, Formula first, Formula second = {});

// Strips the quantifier prefix.
const Formula& matrix(const Formula& f) noexcept;

// True iff no individual variable occurs outside the scope of a binder for it.
bool is_closed(const Formula& f);
bool is_closed(const Term& t);

bool has_schema_atoms(const Formula& f);

// Free individual variables of `f`, each once, in first-occurrence order.
std::vector<Symbol> free_variables(const Formula& f);

// Depth-first preorder traversal; the callback returns false to skip children.
void visit_preorder(const Formula& f, const std::function<bool(const Formula&)>& fn);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

}  // namespace rforge

template <>
struct std::hash<rforge::Formula> {
  std::size_t operator()(const rforge::Formula& f) const noexcept { return f.hash(); }
};

template <>
struct std::hash<rforge::Term> {
  std::size_t operator()(const rforge::Term& t) const noexcept { return t.hash(); }
};
