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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace softset {

enum class ErrorKind {
  kDuplicateIdentifier,
  kEmptyUniverse,
  kBadIdentifier,
  kUnknownParameter,
  kUnknownObject,
  kDuplicateParameter,
  kEmptyImage,
  kContextMismatch,
  kEnumerationTooLarge,
  kLexError,
  kParseError,
  kUnboundName,
  kFormatError,
};

std::string_view to_string(ErrorKind kind);

// 1-based position inside some source text. line == 0 means "no position".
struct SourcePosition {
  std::size_t line = 0;
  std::size_t column = 0;

  bool valid() const { return line != 0; }
  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

// Every failure raised by the library is an Error carrying its kind, so
// callers (the CLI in particular) can map kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, SourcePosition position = {});

  ErrorKind kind() const { return kind_; }
  const SourcePosition& position() const { return position_; }
  // Message without the kind prefix or position.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  SourcePosition position_;
  std::string detail_;
};

}  // namespace softset
