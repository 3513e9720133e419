// Copyright 2026 The Mariner Authors.
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

#include <stdexcept>
#include <string>

namespace mariner {

enum class ErrorCode {
  kMalformedTriple,
  kInvalidIri,
  kInvalidLiteral,
  kUnknownPrefix,
  kUnknownClass,
  kUnknownProperty,
  kUnknownPropertyClass,
  kUnknownAttribute,
  kSyntaxError,
  kDomainRangeIncompatible,
  kEmptyLabel,
  kTemplateMismatch,
  kMalformedRow,
  kMissingTable,
  kUnknownConnection,
  kUnknownCategory,
  kTypeMismatch,
  kIo,
};

const char* to_string(ErrorCode code);

// All library failures are reported with this exception. Parsers that return
// diagnostics (Turtle) never throw it for malformed input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0, int column = 0);

  ErrorCode code() const { return code_; }
  // 1-based position for syntax errors, 0 when not applicable.
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace mariner
