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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mariner/graph.h"
#include "mariner/ontology.h"

namespace mariner {

// One transcribed table: a header and rows of optional cells. Empty cells are
// absent values.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<std::string>>> rows;

  // Index of `name` in the header, or -1.
  int column(std::string_view name) const;
};

// An archival record transcribed against one template.
struct RecordBundle {
  std::string template_id;
  std::string record_id;
  std::string source_label;
  std::map<std::string, Table> tables;
  // Directory the bundle was loaded from; used in error messages.
  std::string origin;
};

// RFC 4180 CSV with a header row. Throws kMalformedRow on ragged rows or an
// unterminated quote.
Table parse_csv(std::string_view text, const std::string& name = "csv");

// Loads a bundle directory: meta.txt plus one <table>.csv per table.
RecordBundle load_bundle(const std::filesystem::path& dir);

struct MintPolicy {
  std::string base = "https://rs.sealitproject.eu/kb/";
};

// Case-preserving and injective: each space becomes '_', '_' and every byte
// outside the URI unreserved set are percent-encoded.
std::string slug(std::string_view label);

// base + category + "/" + slug(label). The category must already be made of
// unreserved characters. Throws kEmptyLabel for a blank label or bad category.
Iri mint_iri(const MintPolicy& policy, std::string_view category, std::string_view label);

// The per-category stand-in for a missing value: base + category + "/unknown".
Iri unknown_placeholder(const MintPolicy& policy, std::string_view category);
bool is_unknown_placeholder(const MintPolicy& policy, const Iri& iri);

// table.col1+col2: values are joined with a space to form the label.
struct ColumnRef {
  std::string table;
  std::vector<std::string> columns;

  std::string to_string() const;
};

struct EntityRule {
  std::string name;
  ColumnRef key;
  Iri class_iri;
  std::string category;
  int line = 0;
};

enum class MissingPolicy { kSkip, kUnknown };

struct LinkRule {
  std::string id;
  std::string source;
  Iri property;
  std::optional<std::string> target_entity;
  std::optional<ColumnRef> literal_column;
  std::optional<Iri> datatype;
  MissingPolicy missing = MissingPolicy::kSkip;
  int line = 0;
};

// A property of a property, carried by the reification node of `link`.
struct AttrRule {
  std::string link;
  Iri property;
  std::optional<std::string> entity;
  std::optional<ColumnRef> column;
  int line = 0;
};

struct MappingSpec {
  std::string template_id;
  std::vector<EntityRule> entities;
  std::vector<LinkRule> links;
  std::vector<AttrRule> attrs;

  const EntityRule* entity(std::string_view name) const;
  const LinkRule* link(std::string_view id) const;
};

// Parses the .map format (docs/mapping-format.md) and checks it against the
// schema. Throws kSyntaxError (with line), kUnknownProperty, kUnknownClass,
// kDomainRangeIncompatible, kUnknownPropertyClass or kUnknownAttribute.
MappingSpec parse_mapping(std::string_view text, const OntologySchema& schema);

struct MappingResult {
  Graph graph;
  std::vector<Violation> violations;
};

// Transforms one record bundle. Throws kTemplateMismatch, kMissingTable or
// kMalformedRow.
MappingResult apply_mapping(const MappingSpec& spec, const RecordBundle& bundle,
                            const OntologySchema& schema, const MintPolicy& policy = {});

namespace vocab {
const Iri& p70_documents();
const Iri& e31_document();
const Iri& e78_curated_holding();
}  // namespace vocab

}  // namespace mariner
