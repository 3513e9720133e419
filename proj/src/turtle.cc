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

#include "mariner/turtle.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "mariner/error.h"
#include "scanner.h"

namespace mariner {

using detail::ScanError;
using detail::Scanner;

std::string ParseDiagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         (severity == Severity::kError ? "error: " : "warning: ") + message;
}

bool TurtleParseResult::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(), [](const ParseDiagnostic& d) {
    return d.severity == ParseDiagnostic::Severity::kError;
  });
}

namespace {

class TurtleParser {
 public:
  TurtleParser(std::string_view text, Graph& graph) : in_(text), graph_(graph) {}

  void parse() {
    while (true) {
      in_.skip_trivia();
      if (in_.at_end()) return;
      if (in_.starts_with("@prefix")) {
        in_.advance(7);
        prefix_directive(/*sparql_style=*/false);
      } else if (in_.at_keyword("PREFIX")) {
        in_.advance(6);
        prefix_directive(/*sparql_style=*/true);
      } else if (in_.starts_with("@base") || in_.at_keyword("BASE")) {
        in_.fail("base IRIs are not supported");
      } else {
        triples();
      }
    }
  }

 private:
  void prefix_directive(bool sparql_style) {
    in_.skip_trivia();
    if (!in_.at_pname()) in_.fail("expected prefix name");
    auto [prefix, local] = in_.read_pname();
    if (!local.empty()) in_.fail("prefix declaration must end with ':'");
    in_.skip_trivia();
    if (in_.peek() != '<') in_.fail("expected namespace IRI");
    std::string ns = in_.read_iriref();
    graph_.set_prefix(prefix, ns);
    if (!sparql_style) expect('.');
  }

  void expect(char c) {
    in_.skip_trivia();
    if (in_.peek() != c) {
      in_.fail(std::string("expected '") + c + "'" + found());
    }
    in_.advance();
  }

  std::string found() const {
    if (in_.at_end()) return " but reached end of input";
    char c = in_.peek();
    if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7F) return "";
    return std::string(" but found '") + c + "'";
  }

  void triples() {
    Iri subject = iri("subject");
    predicate_object_list(subject);
    expect('.');
  }

  void predicate_object_list(const Iri& subject) {
    while (true) {
      in_.skip_trivia();
      Iri predicate = verb();
      object_list(subject, predicate);
      in_.skip_trivia();
      if (in_.peek() != ';') return;
      while (in_.peek() == ';') {
        in_.advance();
        in_.skip_trivia();
      }
      // A trailing ';' before '.' is allowed.
      if (in_.peek() == '.' || in_.at_end()) return;
    }
  }

  void object_list(const Iri& subject, const Iri& predicate) {
    while (true) {
      in_.skip_trivia();
      Term o = object();
      graph_.insert(Triple{subject, predicate, o});
      in_.skip_trivia();
      if (in_.peek() != ',') return;
      in_.advance();
    }
  }

  Iri verb() {
    if (in_.peek() == 'a') {
      unsigned char next = static_cast<unsigned char>(in_.peek(1));
      if (next == ' ' || next == '\t' || next == '\n' || next == '\r' || next == '<' ||
          next == '"' || next == '#') {
        in_.advance();
        return vocab::rdf_type();
      }
    }
    return iri("predicate");
  }

  Term object() {
    char c = in_.peek();
    if (c == '"' || c == '\'') return literal();
    return iri("object");
  }

  Term literal() {
    std::string lexical = in_.read_string();
    if (in_.peek() == '@') {
      int line = in_.line(), col = in_.column();
      in_.advance();
      std::string tag = in_.read_langtag();
      if (!Literal::is_valid_language(tag)) in_.fail_at(line, col, "invalid language tag");
      return Literal::with_language(std::move(lexical), std::move(tag));
    }
    if (in_.peek() == '^' && in_.peek(1) == '^') {
      in_.advance(2);
      return Literal(std::move(lexical), iri("datatype"));
    }
    return Literal(std::move(lexical));
  }

  Iri iri(const char* role) {
    int line = in_.line(), col = in_.column();
    char c = in_.peek();
    std::string value;
    if (c == '<') {
      value = in_.read_iriref();
    } else if (in_.at_pname()) {
      auto [prefix, local] = in_.read_pname();
      auto it = graph_.prefixes().find(prefix);
      if (it == graph_.prefixes().end()) {
        in_.fail_at(line, col, "unknown prefix '" + prefix + ":'");
      }
      value = it->second + local;
    } else if (c == '_' && in_.peek(1) == ':') {
      in_.fail("blank nodes are not supported");
    } else if (c == '[') {
      in_.fail("blank node property lists are not supported");
    } else if (c == '(') {
      in_.fail("collections are not supported");
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
               in_.at_keyword("true") || in_.at_keyword("false")) {
      in_.fail("numeric and boolean shorthand literals are not supported");
    } else {
      in_.fail(std::string("expected ") + role + found());
    }
    if (!Iri::is_valid(value)) in_.fail_at(line, col, "not an absolute IRI: '" + value + "'");
    return Iri(std::move(value));
  }

  Scanner in_;
  Graph& graph_;
};

bool is_serializable_local(std::string_view local) {
  for (size_t i = 0; i < local.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(local[i]);
    bool ok = std::isalnum(c) || c == '_' || (i > 0 && c == '-');
    if (!ok) return false;
  }
  return true;
}

std::string escape_iri(std::string_view iri) {
  std::string out;
  for (char c : iri) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc < 0x20 || c == '\\' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04X", uc);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph& g) : graph_(g) {
    for (const auto& [prefix, ns] : g.prefixes()) namespaces_.emplace_back(ns, prefix);
    // Longest namespace first; ties by prefix name.
    std::sort(namespaces_.begin(), namespaces_.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
      return a.second < b.second;
    });
  }

  std::string iri(const Iri& iri) const {
    const std::string& v = iri.str();
    for (const auto& [ns, prefix] : namespaces_) {
      if (v.size() >= ns.size() && v.compare(0, ns.size(), ns) == 0) {
        std::string_view local = std::string_view(v).substr(ns.size());
        if (is_serializable_local(local)) return prefix + ":" + std::string(local);
      }
    }
    return "<" + escape_iri(v) + ">";
  }

  std::string term(const Term& t) const {
    if (t.is_iri()) return iri(t.iri());
    const Literal& lit = t.literal();
    std::string out = "\"" + escape_string_literal(lit.lexical()) + "\"";
    if (lit.language()) out += "@" + *lit.language();
    if (lit.datatype()) out += "^^" + iri(*lit.datatype());
    return out;
  }

  std::string write() const {
    std::ostringstream out;
    for (const auto& [prefix, ns] : graph_.prefixes()) {
      out << "@prefix " << prefix << ": <" << escape_iri(ns) << "> .\n";
    }
    const Triple* prev = nullptr;
    for (const Triple& t : graph_) {
      if (!prev || prev->subject != t.subject) {
        if (prev) out << " .\n";
        out << "\n" << iri(t.subject) << " " << verb(t.predicate) << " " << term(t.object);
      } else if (prev->predicate != t.predicate) {
        out << " ;\n    " << verb(t.predicate) << " " << term(t.object);
      } else {
        out << " ,\n        " << term(t.object);
      }
      prev = &t;
    }
    if (prev) out << " .\n";
    return out.str();
  }

 private:
  std::string verb(const Iri& p) const { return p == vocab::rdf_type() ? "a" : iri(p); }

  const Graph& graph_;
  std::vector<std::pair<std::string, std::string>> namespaces_;
};

}  // namespace

TurtleParseResult parse_turtle(std::string_view text) {
  TurtleParseResult result;
  if (auto bad = detail::find_invalid_utf8(text)) {
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + *bad, '\n'));
    size_t line_start = text.rfind('\n', *bad == 0 ? 0 : *bad - 1);
    line_start = (line_start == std::string_view::npos || *bad == 0) ? 0 : line_start + 1;
    int col = 1;
    for (size_t i = line_start; i < *bad; ++i) {
      if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++col;
    }
    result.diagnostics.push_back({line, col, "input is not valid UTF-8", ParseDiagnostic::Severity::kError});
    return result;
  }
  TurtleParser parser(text, result.graph);
  try {
    parser.parse();
  } catch (const ScanError& e) {
    result.diagnostics.push_back({e.line, e.column, e.message, ParseDiagnostic::Severity::kError});
  } catch (const Error& e) {
    // Literal/IRI constructors reject values the scanner let through.
    result.diagnostics.push_back({1, 1, e.what(), ParseDiagnostic::Severity::kError});
  }
  return result;
}

std::string serialize_turtle(const Graph& graph) { return TurtleWriter(graph).write(); }

}  // namespace mariner
