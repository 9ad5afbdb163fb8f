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

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace rforge {

// Interned identifier. Equality is pointer equality; ordering is by spelling so
// that anything sorted by Symbol is deterministic across runs.
class Symbol {
 public:
  Symbol();
  explicit Symbol(std::string_view name);

  const std::string& str() const noexcept { return *name_; }
  std::string_view view() const noexcept { return *name_; }
  bool empty() const noexcept { return name_->empty(); }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

  std::size_t hash() const noexcept { return std::hash<const void*>{}(name_); }

 private:
  const std::string* name_;
};

}  // namespace rforge

template <>
struct std::hash<rforge::Symbol> {
  std::size_t operator()(rforge::Symbol s) const noexcept { return s.hash(); }
};
