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

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mariner/graph.h"
#include "mariner/ontology.h"
#include "mariner/query.h"

namespace mariner {

struct FacetCategory {
  std::string id;
  std::string label;
  std::set<Iri> class_set;
};

enum class Direction { kForward, kInverse };

struct PathStep {
  Iri property;
  Direction direction = Direction::kForward;
};

// A typed path between two categories, shown to users as a single relation
// ("arrived at").
struct ConnectionDef {
  std::string id;
  std::string label;
  std::string source;
  std::string target;
  std::vector<PathStep> path;
};

// Connection config: {"connections": [{"id", "label", "source", "target",
// "path": ["sealit:voyages", "^crm:P14_carried_out_by"]}]}. A leading '^'
// walks the property backwards. Throws kSyntaxError on malformed JSON.
std::vector<ConnectionDef> parse_connections(std::string_view json_text);
std::vector<ConnectionDef> load_connections(const std::filesystem::path& path);

class FacetRegistry {
 public:
  // The nine search categories.
  static std::vector<FacetCategory> builtin_categories();

  // Type-checks every connection against the schema. Throws
  // kUnknownCategory, kUnknownProperty or kTypeMismatch.
  FacetRegistry(const OntologySchema& schema, std::vector<ConnectionDef> connections);

  const OntologySchema& schema() const { return *schema_; }
  const std::vector<FacetCategory>& categories() const { return categories_; }
  const std::vector<ConnectionDef>& connections() const { return connections_; }

  const FacetCategory& category(std::string_view id) const;  // kUnknownCategory
  // The connection `id` leaving `category`. Throws kUnknownConnection.
  const ConnectionDef& connection(std::string_view category, std::string_view id) const;
  std::vector<const ConnectionDef*> connections_from(std::string_view category) const;

 private:
  void type_check(const ConnectionDef& c) const;

  const OntologySchema* schema_;
  std::vector<FacetCategory> categories_;
  std::vector<ConnectionDef> connections_;
};

struct QueryState;

// One refinement: follow `connection` to a fixed instance, to a nested
// state, or to any instance of the target category.
struct Clause {
  std::string connection;
  std::optional<Iri> instance;
  std::shared_ptr<QueryState> state;
};

struct QueryState {
  std::string root;
  std::vector<Clause> clauses;
  std::optional<std::string> group_by;  // a connection leaving `root`
};

// {root, clauses:[{connection, instance?|state?}], groupBy?}. Throws
// kSyntaxError.
QueryState parse_query_state(std::string_view json_text);
std::string query_state_to_json(const QueryState& state);

// Translates a state into a BGP over a root variable named after the root
// category. Throws kUnknownCategory, kUnknownConnection or kTypeMismatch.
QueryAst compile(const QueryState& state, const FacetRegistry& registry);

struct Instance {
  Iri iri;
  std::string label;
};

struct Bucket {
  std::string label;
  Iri iri;
  size_t count = 0;
};

struct AggregationResult {
  std::vector<Bucket> buckets;
  size_t total = 0;
};

struct RunResult {
  bool grouped = false;
  std::vector<Instance> rows;      // ungrouped
  AggregationResult aggregation;   // grouped
};

RunResult run(const QueryState& state, const FacetRegistry& registry, const Graph& graph,
              EntailmentMode mode = EntailmentMode::kRdfs);

// Instances of the category's classes (subclasses included) whose label
// starts with `prefix`, ignoring ASCII case; ordered by label, then IRI.
std::vector<Instance> list_instances(const FacetRegistry& registry, const Graph& graph,
                                     std::string_view category, std::string_view prefix, size_t limit);

struct KbStats {
  size_t triples = 0;
  size_t ships = 0;
  size_t persons = 0;
  size_t legal_bodies = 0;
  size_t locations = 0;
};

// Entity counts by class closure; unknown placeholders are not counted.
KbStats compute_stats(const Graph& graph, const OntologySchema& schema);

// rdfs:label of `iri`, or the text after its last '/' or '#'.
std::string display_label(const Graph& graph, const Iri& iri);

}  // namespace mariner
