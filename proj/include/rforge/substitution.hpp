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
#include <utility>
#include <vector>

#include "rforge/formula.hpp"

namespace rforge {

// A schema atom as a variable: name plus scope tag.
struct AtomKey {
  Symbol name;
  std::uint32_t scope = 0;

  friend bool operator==(const AtomKey&, const AtomKey&) = default;
};

inline AtomKey atom_key(const Formula& atom) { return {atom.name(), atom.scope()}; }

class MalformedSubstitution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bindings of schema atoms to formulas and free individual variables to terms.
// Bindings may be triangular while unification runs; `normalized()` returns
// the idempotent form. Bindings are few, so flat vectors beat maps here.
class Substitution {
 public:
  using SchemaBinding = std::pair<AtomKey, Formula>;
  using TermBinding = std::pair<Symbol, Term>;

  const Formula* lookup(const AtomKey& key) const noexcept;
  const Term* lookup(Symbol variable) const noexcept;

  // Throw MalformedSubstitution on rebinding or on an occurs-check violation.
  void bind(const AtomKey& key, Formula value);
  void bind(Symbol variable, Term value);

  const std::vector<SchemaBinding>& schema_bindings() const noexcept { return schema_; }
  const std::vector<TermBinding>& term_bindings() const noexcept { return terms_; }
  bool empty() const noexcept { return schema_.empty() && terms_.empty(); }
  std::size_t size() const noexcept { return schema_.size() + terms_.size(); }

  // Fully resolved bindings; applying the result twice equals applying once.
  Substitution normalized() const;

  // Deterministic text, bindings sorted by variable: "{A := p & q, x := s(0)}".
  std::string to_string() const;

  // Unchecked insertion used by the unifier, which has already done the checks.
  void push(const AtomKey& key, Formula value) { schema_.emplace_back(key, std::move(value)); }
  void push(Symbol variable, Term value) { terms_.emplace_back(variable, std::move(value)); }

 private:
  std::vector<SchemaBinding> schema_;
  std::vector<TermBinding> terms_;
};

// Replacement of bound atoms and variables; bindings are followed through
// (triangular form), which is simultaneous replacement whenever the domain is
// disjoint from the range variables, as for every normalized substitution.
// Schema atoms are replaced literally (a schema atom
// under a binder may receive a formula mentioning the bound variable); free
// individual variables are replaced capture-avoidingly, renaming binders that
// would capture a variable of the inserted term. Bound occurrences are never
// touched.
Formula apply_substitution(const Formula& f, const Substitution& sigma);
Term apply_substitution(const Term& t, const Substitution& sigma);

// One-way matching: returns the unique sigma over the schema's atoms and free
// variables with apply_substitution(schema, sigma) == target.
std::optional<Substitution> match_schema(const Formula& schema, const Formula& target);

// Most general unifier with occurs check. Schema atoms of both sides are
// variables; the caller renames them apart first. The result is normalized.
std::optional<Substitution> unify(const Formula& f, const Formula& g);

// Extends `sigma` (triangular form) so that it also unifies f and g. On
// failure `sigma` is left in an unspecified state.
bool unify_into(const Formula& f, const Formula& g, Substitution& sigma);

// Sets the scope tag of every schema atom in `f`.
Formula with_scope(const Formula& f, std::uint32_t scope);

// Schema atoms of `f`, each once, in first preorder occurrence.
std::vector<AtomKey> schema_atoms(const Formula& f);

// Substitutes the term for free occurrences of `var` (capture-avoiding).
Formula instantiate(const Formula& body, Symbol var, const Term& value);

}  // namespace rforge
