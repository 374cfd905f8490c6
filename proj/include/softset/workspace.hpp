// Copyright 2026 The Softset Authors
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

// Line-oriented text format for a context plus named soft sets:
//
//   universe: h1 h2 h3
//   parameters: e1 e2
//   softset F:
//     e1: h1 h3
//
// `#` starts a comment, blank lines are ignored, tokens are separated by
// spaces or tabs, and indentation is cosmetic. The two header lines are
// required, in that order, before any softset block.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softset/soft_set.hpp"

namespace softset::io {

struct Binding {
  std::string name;
  SoftSet value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

class Workspace {
 public:
  Workspace() = default;
  explicit Workspace(Context context) : context_(std::move(context)) {}

  const Context& context() const { return context_; }
  const std::vector<Binding>& bindings() const { return bindings_; }

  // nullptr when unbound.
  const SoftSet* find(std::string_view name) const;
  // Throws DuplicateIdentifier for a repeated name, BadIdentifier for a name
  // that is not an expression-language NAME, ContextMismatch for a soft set
  // over another context.
  void bind(std::string name, SoftSet value);

  friend bool operator==(const Workspace&, const Workspace&) = default;

 private:
  Context context_;
  std::vector<Binding> bindings_;
};

struct Warning {
  std::size_t line;
  std::string message;
};

// Throws FormatError carrying the 1-based line number. Image lines with no
// objects are dropped and reported through `warnings` when provided.
Workspace load_workspace(std::string_view text, std::vector<Warning>* warnings = nullptr);

// Canonical form: context order everywhere, one parameter per line, image
// lines indented by two spaces. Byte-identical for equal workspaces.
std::string render_workspace(const Workspace& workspace);

// The header lines only.
std::string render_context(const Context& context);
// A single "softset NAME:" block.
std::string render_soft_set(std::string_view name, const SoftSet& value);
// Compact one-line form for diagnostics, e.g. "{e1: h1 h2; e3: h4}".
std::string render_inline(const SoftSet& value);

// True for [A-Za-z_][A-Za-z0-9_]* excluding the keywords EMPTY and UNIVERSAL.
bool is_binding_name(std::string_view name);

}  // namespace softset::io
