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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mariner/graph.h"
#include "mariner/ontology.h"

namespace mariner {

struct Variable {
  std::string name;  // without the leading '?'

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Variable, Term>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// COUNT([DISTINCT] ?v) or COUNT([DISTINCT] *) AS ?alias.
struct CountSpec {
  std::optional<std::string> variable;  // nullopt means '*'
  bool distinct = false;
  std::string alias;
};

struct OrderKey {
  std::string variable;
  bool descending = false;
};

struct QueryAst {
  std::map<std::string, std::string> prefixes;
  bool distinct = false;
  bool select_all = false;
  // Output columns in order. Includes the COUNT alias at its position.
  std::vector<std::string> projection;
  std::optional<CountSpec> count;
  std::vector<TriplePattern> where;
  std::vector<std::string> group_by;
  std::vector<OrderKey> order_by;
  std::optional<size_t> limit;

  // Variables of the WHERE clause in order of first appearance.
  std::vector<std::string> where_variables() const;
  bool grouped() const { return count.has_value() || !group_by.empty(); }
};

// Throws kSyntaxError (with line and column) or kUnknownPrefix.
QueryAst parse_query(std::string_view text);

enum class EntailmentMode { kNone, kRdfs };

std::optional<EntailmentMode> parse_entailment_mode(std::string_view name);

// One stored-triple pattern standing in for part of an entailed pattern.
// `reversed` marks alternatives whose stored subject and object swap roles;
// they never match triples with a literal object.
struct PatternAlternative {
  TriplePattern stored;
  bool reversed = false;
};

struct RewrittenPattern {
  TriplePattern pattern;
  std::vector<PatternAlternative> alternatives;
  // Variable predicate or variable class: each stored match is widened to
  // its entailed super-triples instead of enumerating alternatives.
  bool widen_matches = false;
};

// Expands each WHERE pattern into the disjunction of stored patterns that
// entail it, using only the schema's precomputed closures. In kNone mode
// every pattern maps to itself.
std::vector<RewrittenPattern> rewrite(const QueryAst& ast, const OntologySchema& schema,
                                      EntailmentMode mode);

struct BindingsTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<Term>>> rows;
};

BindingsTable evaluate(const QueryAst& ast, const Graph& graph, const OntologySchema& schema,
                       EntailmentMode mode = EntailmentMode::kNone);

// ORDER BY comparison: code-point order of lexical forms; two xsd:integer
// literals compare numerically; unbound sorts first.
int compare_for_order(const std::optional<Term>& a, const std::optional<Term>& b);

// Header row of variable names, then IRIs and literal lexical forms.
std::string to_csv(const BindingsTable& table);
// SPARQL 1.1 query results JSON.
std::string to_json(const BindingsTable& table);

}  // namespace mariner
