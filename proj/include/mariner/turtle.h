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

#include <string>
#include <string_view>
#include <vector>

#include "mariner/graph.h"

namespace mariner {

struct ParseDiagnostic {
  enum class Severity { kError, kWarning };
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in code points
  std::string message;
  Severity severity = Severity::kError;

  std::string to_string() const;
};

struct TurtleParseResult {
  Graph graph;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const;
};

// Parses the Turtle subset documented in docs/turtle-subset.md. Never throws
// on malformed input: on the first error, returns the triples read so far and
// an ERROR diagnostic. Input that is not UTF-8 yields an empty graph.
TurtleParseResult parse_turtle(std::string_view text);

// Canonical serialisation: prefixes sorted, subjects in index order,
// predicates grouped with ';' and objects with ','.
std::string serialize_turtle(const Graph& graph);

}  // namespace mariner
