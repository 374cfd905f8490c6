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

#include "softset/workspace.hpp"

#include <algorithm>
#include <optional>

#include "softset/error.hpp"

namespace softset::io {

bool is_binding_name(std::string_view name) {
  if (name.empty() || name == "EMPTY" || name == "UNIVERSAL") return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); });
}

const SoftSet* Workspace::find(std::string_view name) const {
  auto it = std::find_if(bindings_.begin(), bindings_.end(), [&](const Binding& b) { return b.name == name; });
  return it == bindings_.end() ? nullptr : &it->value;
}

void Workspace::bind(std::string name, SoftSet value) {
  if (!is_binding_name(name)) {
    throw Error(ErrorKind::kBadIdentifier, "'" + name + "' is not a valid soft set name");
  }
  if (find(name) != nullptr) {
    throw Error(ErrorKind::kDuplicateIdentifier, "soft set '" + name + "' is already bound");
  }
  if (!(value.context() == context_)) {
    throw Error(ErrorKind::kContextMismatch, "soft set '" + name + "' belongs to another context");
  }
  bindings_.push_back(Binding{std::move(name), std::move(value)});
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

class Loader {
 public:
  explicit Loader(std::vector<Warning>* warnings) : warnings_(warnings) {}

  Workspace load(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++line_no;
      line_ = line_no;
      std::string_view line = text.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) handle(line);
      if (end == text.size()) break;
      pos = end + 1;
    }
    if (!have_universe_) fail("missing 'universe:' header");
    if (!have_parameters_) fail("missing 'parameters:' header");
    flush_block();
    return std::move(workspace_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::kFormatError, "line " + std::to_string(line_) + ": " + message,
                SourcePosition{line_, 1});
  }

  void handle(std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected ':' in '" + std::string(line) + "'");
    const std::string_view head = trim(line.substr(0, colon));
    const std::string_view rest = line.substr(colon + 1);
    const auto head_tokens = split_tokens(head);

    if (!have_universe_) {
      if (head != "universe") fail("missing 'universe:' header");
      for (auto t : split_tokens(rest)) objects_.emplace_back(t);
      have_universe_ = true;
      return;
    }
    if (!have_parameters_) {
      if (head != "parameters") fail("missing 'parameters:' header after 'universe:'");
      std::vector<std::string> parameters;
      for (auto t : split_tokens(rest)) parameters.emplace_back(t);
      try {
        context_ = Context::create(std::move(objects_), std::move(parameters));
      } catch (const Error& e) {
        fail(e.detail());
      }
      workspace_ = Workspace(*context_);
      have_parameters_ = true;
      return;
    }
    if (head == "universe" || head == "parameters") fail("duplicate '" + std::string(head) + ":' header");
    if (!head_tokens.empty() && head_tokens.front() == "softset") {
      if (head_tokens.size() != 2 || !trim(rest).empty()) fail("expected 'softset NAME:'");
      start_block(std::string(head_tokens[1]));
      return;
    }
    if (head_tokens.size() != 1) fail("expected 'PARAMETER: OBJECTS...'");
    add_image(head_tokens.front(), split_tokens(rest));
  }

  void start_block(std::string name) {
    flush_block();
    if (!is_binding_name(name)) fail("'" + name + "' is not a valid soft set name");
    if (workspace_.find(name) != nullptr || name == block_name_) fail("duplicate soft set name '" + name + "'");
    block_name_ = std::move(name);
    in_block_ = true;
    block_entries_.clear();
    block_parameters_seen_.assign(context_->parameter_count(), false);
  }

  void add_image(std::string_view parameter, const std::vector<std::string_view>& objects) {
    if (!in_block_) fail("image line outside a 'softset' block");
    const auto p = context_->find_parameter(parameter);
    if (!p) fail("unknown parameter " + std::string(parameter));
    if (block_parameters_seen_[*p]) {
      fail("parameter " + std::string(parameter) + " listed twice in soft set '" + block_name_ + "'");
    }
    block_parameters_seen_[*p] = true;
    ObjectSet image(context_->object_count());
    for (auto name : objects) {
      const auto o = context_->find_object(name);
      if (!o) fail("unknown object " + std::string(name));
      image.insert(*o);
    }
    if (image.empty()) {
      if (warnings_ != nullptr) {
        warnings_->push_back(Warning{line_, "empty image for parameter " + std::string(parameter) +
                                                " in soft set '" + block_name_ + "' dropped"});
      }
      return;
    }
    block_entries_.push_back(Entry{*p, std::move(image)});
  }

  void flush_block() {
    if (!in_block_) return;
    workspace_.bind(block_name_, SoftSet::from_entries(*context_, std::move(block_entries_)));
    block_entries_.clear();
    in_block_ = false;
  }

  std::vector<Warning>* warnings_;
  std::size_t line_ = 0;
  bool have_universe_ = false;
  bool have_parameters_ = false;
  std::vector<std::string> objects_;
  std::optional<Context> context_;
  Workspace workspace_;
  bool in_block_ = false;
  std::string block_name_;
  std::vector<Entry> block_entries_;
  std::vector<bool> block_parameters_seen_;
};

void append_names(std::string& out, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    out += ' ';
    out += n;
  }
}

}  // namespace

Workspace load_workspace(std::string_view text, std::vector<Warning>* warnings) {
  return Loader(warnings).load(text);
}

std::string render_context(const Context& context) {
  std::string out = "universe:";
  append_names(out, context.objects());
  out += "\nparameters:";
  append_names(out, context.parameters());
  out += '\n';
  return out;
}

std::string render_soft_set(std::string_view name, const SoftSet& value) {
  const Context& ctx = value.context();
  std::string out = "softset ";
  out += name;
  out += ":\n";
  for (const Entry& e : value.entries()) {
    out += "  ";
    out += ctx.parameter(e.parameter);
    out += ':';
    append_names(out, ctx.object_names(e.objects));
    out += '\n';
  }
  return out;
}

std::string render_workspace(const Workspace& workspace) {
  std::string out = render_context(workspace.context());
  for (const Binding& b : workspace.bindings()) out += render_soft_set(b.name, b.value);
  return out;
}

std::string render_inline(const SoftSet& value) {
  const Context& ctx = value.context();
  std::string out = "{";
  bool first = true;
  for (const Entry& e : value.entries()) {
    if (!first) out += "; ";
    first = false;
    out += ctx.parameter(e.parameter);
    out += ':';
    append_names(out, ctx.object_names(e.objects));
  }
  out += '}';
  return out;
}

}  // namespace softset::io
