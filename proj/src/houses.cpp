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

#include "softset/expr.hpp"
#include "softset/houses.hpp"

namespace softset::houses {

io::Workspace workspace() { return io::load_workspace(workspace_text()); }

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> kFixtures = {
      {"intersection", "F & G",
       "softset intersection:\n"
       "  e3: h2 h4\n"
       "  e4: h1\n"
       "  e5: h2 h3 h4 h5\n"
       "  e7: h3\n"},
      {"union", "F | G",
       "softset union:\n"
       "  e1: h3 h5\n"
       "  e2: h2 h3 h4 h5\n"
       "  e3: h2 h4\n"
       "  e4: h1\n"
       "  e5: h1 h2 h3 h4 h5\n"
       "  e6: h3\n"
       "  e7: h3 h5\n"},
      {"complement", "F^c",
       "softset complement:\n"
       "  e1: h1 h2 h3 h4 h5\n"
       "  e2: h1 h4\n"
       "  e3: h1 h3 h5\n"
       "  e4: h2 h3 h4 h5\n"
       "  e6: h1 h2 h3 h4 h5\n"
       "  e7: h1 h2 h4\n"
       "  e8: h1 h2 h3 h4 h5\n"},
      // e2 is {h2 h3 h5}: F(e2) \ G(e2) = {h2 h3 h5} \ {h4}. See difference_erratum().
      {"difference", "F - G",
       "softset difference:\n"
       "  e2: h2 h3 h5\n"
       "  e5: h1\n"
       "  e7: h5\n"},
  };
  return kFixtures;
}

std::vector<FixtureOutcome> check_fixtures() {
  const io::Workspace ws = workspace();
  expr::Environment env;
  for (const auto& b : ws.bindings()) env.emplace(b.name, b.value);
  std::vector<FixtureOutcome> out;
  for (const Fixture& f : fixtures()) {
    const SoftSet value = expr::evaluate(*expr::parse(f.expression), env, ws.context());
    std::string actual = io::render_soft_set(f.operation, value);
    const bool matches = actual == f.expected;
    out.push_back(FixtureOutcome{&f, std::move(actual), matches});
  }
  return out;
}

std::string_view difference_erratum() {
  return "ERRATUM difference at e2: the published worked example prints {h2}; "
         "F(e2) \\ G(e2) = {h2 h3 h5} \\ {h4} = {h2 h3 h5}, which the fixture asserts";
}

}  // namespace softset::houses
