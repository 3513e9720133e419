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

#include "mariner/term.h"

#include <algorithm>
#include <cctype>

#include "mariner/error.h"

namespace mariner {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedTriple: return "malformed-triple";
    case ErrorCode::kInvalidIri: return "invalid-iri";
    case ErrorCode::kInvalidLiteral: return "invalid-literal";
    case ErrorCode::kUnknownPrefix: return "unknown-prefix";
    case ErrorCode::kUnknownClass: return "unknown-class";
    case ErrorCode::kUnknownProperty: return "unknown-property";
    case ErrorCode::kUnknownPropertyClass: return "unknown-property-class";
    case ErrorCode::kUnknownAttribute: return "unknown-attribute";
    case ErrorCode::kSyntaxError: return "syntax-error";
    case ErrorCode::kDomainRangeIncompatible: return "domain-range-incompatible";
    case ErrorCode::kEmptyLabel: return "empty-label";
    case ErrorCode::kTemplateMismatch: return "template-mismatch";
    case ErrorCode::kMalformedRow: return "malformed-row";
    case ErrorCode::kMissingTable: return "missing-table";
    case ErrorCode::kUnknownConnection: return "unknown-connection";
    case ErrorCode::kUnknownCategory: return "unknown-category";
    case ErrorCode::kTypeMismatch: return "type-mismatch";
    case ErrorCode::kIo: return "io-error";
  }
  return "error";
}

Error::Error(ErrorCode code, const std::string& message, int line, int column)
    : std::runtime_error(message), code_(code), line_(line), column_(column) {}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) {
    throw Error(ErrorCode::kInvalidIri, "invalid IRI: '" + value_ + "'");
  }
}

bool Iri::is_valid(std::string_view value) {
  if (value.empty()) return false;
  for (char c : value) {
    if (is_space(c) || c == '<' || c == '>' || c == '"') return false;
  }
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  if (!std::isalpha(static_cast<unsigned char>(value[0]))) return false;
  for (size_t i = 1; i < value.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(value[i]);
    if (c == ':') return i + 1 < value.size();
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

std::string_view Iri::local_name() const {
  std::string_view v = value_;
  auto pos = v.find_last_of("/#");
  if (pos == std::string_view::npos) return v;
  return v.substr(pos + 1);
}

Literal::Literal(std::string lexical) : lexical_(std::move(lexical)) {}

Literal::Literal(std::string lexical, Iri datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {}

Literal Literal::with_language(std::string lexical, std::string language) {
  if (!is_valid_language(language)) {
    throw Error(ErrorCode::kInvalidLiteral, "invalid language tag: '" + language + "'");
  }
  std::transform(language.begin(), language.end(), language.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  Literal lit;
  lit.lexical_ = std::move(lexical);
  lit.language_ = std::move(language);
  return lit;
}

bool Literal::is_valid_language(std::string_view tag) {
  // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  if (tag.empty()) return false;
  size_t i = 0;
  while (i < tag.size() && std::isalpha(static_cast<unsigned char>(tag[i]))) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    size_t start = ++i;
    while (i < tag.size() && std::isalnum(static_cast<unsigned char>(tag[i]))) ++i;
    if (i == start) return false;
  }
  return true;
}

const std::string& Term::lexical() const {
  return is_iri() ? iri().str() : literal().lexical();
}

std::string escape_string_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Term::to_ntriples() const {
  if (is_iri()) return "<" + iri().str() + ">";
  const Literal& lit = literal();
  std::string out = "\"" + escape_string_literal(lit.lexical()) + "\"";
  if (lit.language()) out += "@" + *lit.language();
  if (lit.datatype()) out += "^^<" + lit.datatype()->str() + ">";
  return out;
}

Triple Triple::make(const Term& s, const Term& p, const Term& o) {
  if (!s.is_iri()) {
    throw Error(ErrorCode::kMalformedTriple, "literal in subject position: " + s.to_ntriples());
  }
  if (!p.is_iri()) {
    throw Error(ErrorCode::kMalformedTriple, "literal in predicate position: " + p.to_ntriples());
  }
  return Triple{s.iri(), p.iri(), o};
}

namespace vocab {

Iri sealit(std::string_view local) { return Iri(std::string(kSealit) + std::string(local)); }
Iri crm(std::string_view local) { return Iri(std::string(kCrm) + std::string(local)); }

const Iri& rdf_type() {
  static const Iri iri(std::string(kRdf) + "type");
  return iri;
}
const Iri& rdfs_label() {
  static const Iri iri(std::string(kRdfs) + "label");
  return iri;
}
const Iri& xsd_integer() {
  static const Iri iri(std::string(kXsd) + "integer");
  return iri;
}
const Iri& xsd_string() {
  static const Iri iri(std::string(kXsd) + "string");
  return iri;
}

}  // namespace vocab

}  // namespace mariner
