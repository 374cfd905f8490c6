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

#include "softset/error.hpp"

namespace softset {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::kEmptyUniverse: return "EmptyUniverse";
    case ErrorKind::kBadIdentifier: return "BadIdentifier";
    case ErrorKind::kUnknownParameter: return "UnknownParameter";
    case ErrorKind::kUnknownObject: return "UnknownObject";
    case ErrorKind::kDuplicateParameter: return "DuplicateParameter";
    case ErrorKind::kEmptyImage: return "EmptyImage";
    case ErrorKind::kContextMismatch: return "ContextMismatch";
    case ErrorKind::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::kLexError: return "LexError";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnboundName: return "UnboundName";
    case ErrorKind::kFormatError: return "FormatError";
  }
  return "Error";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message,
                           const SourcePosition& position) {
  std::string out(to_string(kind));
  if (position.valid()) {
    out += " at ";
    out += std::to_string(position.line);
    out += ':';
    out += std::to_string(position.column);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, SourcePosition position)
    : std::runtime_error(format_message(kind, message, position)),
      kind_(kind),
      position_(position),
      detail_(message) {}

}  // namespace softset
