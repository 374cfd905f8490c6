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

// The bundled houses workspace (five houses, eight attributes, two buyers'
// soft sets F and G) and the expected results of the four operations on it.

#include <string>
#include <string_view>
#include <vector>

#include "softset/workspace.hpp"

namespace softset::houses {

std::string_view workspace_text();
io::Workspace workspace();

struct Fixture {
  std::string operation;   // "intersection", "union", ...
  std::string expression;  // over F and G
  std::string expected;    // canonical render_soft_set(operation, ...)
};

const std::vector<Fixture>& fixtures();

struct FixtureOutcome {
  const Fixture* fixture;
  std::string actual;
  bool matches;
};

std::vector<FixtureOutcome> check_fixtures();

// Note on the one published value that disagrees with the definition of
// difference; the fixture holds the definitional value.
std::string_view difference_erratum();

}  // namespace softset::houses
