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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace mariner {

// Absolute IRI. Construction validates: non-empty, no whitespace, and a
// scheme ("http:", "urn:", ...).
class Iri {
 public:
  explicit Iri(std::string value);

  static bool is_valid(std::string_view value);

  const std::string& str() const { return value_; }
  // Text after the last '/' or '#'.
  std::string_view local_name() const;

  friend bool operator==(const Iri&, const Iri&) = default;
  friend std::strong_ordering operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

// RDF literal. At most one of datatype and language is set.
class Literal {
 public:
  explicit Literal(std::string lexical);
  Literal(std::string lexical, Iri datatype);
  // Language tags are normalised to lower case.
  static Literal with_language(std::string lexical, std::string language);

  static bool is_valid_language(std::string_view tag);

  const std::string& lexical() const { return lexical_; }
  const std::optional<Iri>& datatype() const { return datatype_; }
  const std::optional<std::string>& language() const { return language_; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;

 private:
  Literal() = default;

  std::string lexical_;
  std::optional<Iri> datatype_;
  std::optional<std::string> language_;
};

class Term {
 public:
  Term(Iri iri) : value_(std::move(iri)) {}          // NOLINT: implicit by design of RDF terms
  Term(Literal lit) : value_(std::move(lit)) {}      // NOLINT

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }
  const Iri& iri() const { return std::get<Iri>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }

  // IRI text or literal lexical form; the key used by ORDER BY.
  const std::string& lexical() const;
  // N-Triples rendering: <iri> or "lex"@lang / "lex"^^<dt>.
  std::string to_ntriples() const;

  // IRIs order before literals; within a kind, by string content.
  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  std::variant<Iri, Literal> value_;
};

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  // Rejects literals in subject or predicate position.
  static Triple make(const Term& s, const Term& p, const Term& o);

  friend bool operator==(const Triple&, const Triple&) = default;
  // Lexicographic by subject, predicate, object.
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

std::string escape_string_literal(std::string_view text);

namespace vocab {
inline constexpr std::string_view kSealit = "http://www.sealitproject.eu/ontology/";
inline constexpr std::string_view kCrm = "http://www.cidoc-crm.org/cidoc-crm/";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";

Iri sealit(std::string_view local);
Iri crm(std::string_view local);
const Iri& rdf_type();
const Iri& rdfs_label();
const Iri& xsd_integer();
const Iri& xsd_string();
}  // namespace vocab

}  // namespace mariner
