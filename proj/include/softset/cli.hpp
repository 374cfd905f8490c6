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

#include <iosfwd>
#include <string>
#include <vector>

namespace softset::cli {

// Process exit codes; stable contract.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // law violated or fixture mismatch
  kUsageError = 2,   // bad flags, lex/parse errors, unbound names
  kDataError = 3,    // unreadable or malformed workspace, enumeration cap exceeded
};

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softset::cli
