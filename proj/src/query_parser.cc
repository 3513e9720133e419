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

#include <algorithm>
#include <cctype>
#include <set>

#include "mariner/error.h"
#include "mariner/query.h"
#include "scanner.h"

namespace mariner {

using detail::ScanError;
using detail::Scanner;

std::vector<std::string> QueryAst::where_variables() const {
  std::vector<std::string> out;
  auto add = [&](const PatternTerm& t) {
    if (auto* v = std::get_if<Variable>(&t)) {
      if (std::find(out.begin(), out.end(), v->name) == out.end()) out.push_back(v->name);
    }
  };
  for (const auto& p : where) {
    add(p.subject);
    add(p.predicate);
    add(p.object);
  }
  return out;
}

std::optional<EntailmentMode> parse_entailment_mode(std::string_view name) {
  if (name == "none") return EntailmentMode::kNone;
  if (name == "rdfs") return EntailmentMode::kRdfs;
  return std::nullopt;
}

namespace {

// Thrown for prefixes that are not declared; carries a position like
// ScanError but maps to a different error code.
struct UnknownPrefix {
  int line;
  int column;
  std::string message;
};

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : in_(text) {}

  QueryAst parse() {
    prologue();
    select_clause();
    where_clause();
    modifiers();
    in_.skip_trivia();
    if (!in_.at_end()) in_.fail("unexpected text after query" + found());
    check();
    return std::move(ast_);
  }

 private:
  std::string found() const {
    if (in_.at_end()) return " (reached end of input)";
    unsigned char c = static_cast<unsigned char>(in_.peek());
    if (c < 0x20 || c >= 0x7F) return "";
    return std::string(" near '") + static_cast<char>(c) + "'";
  }

  bool keyword(std::string_view kw) {
    in_.skip_trivia();
    if (!in_.at_keyword(kw)) return false;
    in_.advance(kw.size());
    return true;
  }

  void expect_keyword(std::string_view kw) {
    if (!keyword(kw)) in_.fail("expected " + std::string(kw) + found());
  }

  bool punct(char c) {
    in_.skip_trivia();
    if (in_.peek() != c) return false;
    in_.advance();
    return true;
  }

  void expect(char c) {
    if (!punct(c)) in_.fail(std::string("expected '") + c + "'" + found());
  }

  void prologue() {
    while (true) {
      if (keyword("PREFIX")) {
        in_.skip_trivia();
        if (!in_.at_pname()) in_.fail("expected prefix name" + found());
        auto [prefix, local] = in_.read_pname();
        if (!local.empty()) in_.fail("prefix declaration must end with ':'");
        in_.skip_trivia();
        if (in_.peek() != '<') in_.fail("expected namespace IRI" + found());
        ast_.prefixes[prefix] = in_.read_iriref();
      } else if (keyword("BASE")) {
        in_.fail("BASE is not supported");
      } else {
        return;
      }
    }
  }

  bool at_variable() {
    in_.skip_trivia();
    return in_.peek() == '?' || in_.peek() == '$';
  }

  std::string variable() {
    in_.skip_trivia();
    if (in_.peek() != '?' && in_.peek() != '$') in_.fail("expected variable" + found());
    in_.advance();
    return in_.read_varname();
  }

  void select_clause() {
    expect_keyword("SELECT");
    if (keyword("DISTINCT")) ast_.distinct = true;
    if (punct('*')) {
      ast_.select_all = true;
      return;
    }
    while (true) {
      in_.skip_trivia();
      if (at_variable()) {
        ast_.projection.push_back(variable());
      } else if (in_.peek() == '(') {
        int line = in_.line(), col = in_.column();
        in_.advance();
        if (ast_.count) in_.fail_at(line, col, "only one aggregate is supported");
        expect_keyword("COUNT");
        expect('(');
        CountSpec count;
        if (keyword("DISTINCT")) count.distinct = true;
        if (!punct('*')) count.variable = variable();
        expect(')');
        expect_keyword("AS");
        count.alias = variable();
        expect(')');
        ast_.projection.push_back(count.alias);
        ast_.count = std::move(count);
      } else {
        break;
      }
    }
    if (ast_.projection.empty()) in_.fail("expected projection" + found());
  }

  void where_clause() {
    keyword("WHERE");
    expect('{');
    while (true) {
      if (punct('}')) return;
      triples();
      if (punct('.')) continue;
      expect('}');
      return;
    }
  }

  PatternTerm iri_or_variable(const char* role) {
    in_.skip_trivia();
    if (at_variable()) return Variable{variable()};
    return iri(role);
  }

  Term iri(const char* role) {
    in_.skip_trivia();
    int line = in_.line(), col = in_.column();
    std::string value;
    if (in_.peek() == '<') {
      value = in_.read_iriref();
    } else if (in_.at_pname()) {
      auto [prefix, local] = in_.read_pname();
      auto it = ast_.prefixes.find(prefix);
      if (it == ast_.prefixes.end()) {
        throw UnknownPrefix{line, col, "unknown prefix '" + prefix + ":'"};
      }
      value = it->second + local;
    } else {
      in_.fail(std::string("expected ") + role + found());
    }
    if (!Iri::is_valid(value)) in_.fail_at(line, col, "not an absolute IRI: '" + value + "'");
    return Iri(std::move(value));
  }

  PatternTerm verb() {
    in_.skip_trivia();
    if (in_.peek() == 'a') {
      unsigned char next = static_cast<unsigned char>(in_.peek(1));
      if (!(std::isalnum(next) || next == '_' || next == '-' || next == ':' || next == '.' || next >= 0x80)) {
        in_.advance();
        return Term(vocab::rdf_type());
      }
    }
    return iri_or_variable("predicate");
  }

  PatternTerm object() {
    in_.skip_trivia();
    char c = in_.peek();
    if (c == '"' || c == '\'') {
      std::string lexical = in_.read_string();
      if (in_.peek() == '@') {
        int line = in_.line(), col = in_.column();
        in_.advance();
        std::string tag = in_.read_langtag();
        if (!Literal::is_valid_language(tag)) in_.fail_at(line, col, "invalid language tag");
        return Term(Literal::with_language(std::move(lexical), std::move(tag)));
      }
      if (in_.peek() == '^' && in_.peek(1) == '^') {
        in_.advance(2);
        return Term(Literal(std::move(lexical), iri("datatype").iri()));
      }
      return Term(Literal(std::move(lexical)));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && std::isdigit(static_cast<unsigned char>(in_.peek(1))))) {
      std::string digits(1, c);
      in_.advance();
      while (std::isdigit(static_cast<unsigned char>(in_.peek()))) {
        digits += in_.peek();
        in_.advance();
      }
      if (in_.peek() == '.' && std::isdigit(static_cast<unsigned char>(in_.peek(1)))) {
        in_.fail("only integer numeric literals are supported");
      }
      return Term(Literal(std::move(digits), vocab::xsd_integer()));
    }
    return iri_or_variable("object");
  }

  void triples() {
    PatternTerm subject = iri_or_variable("subject or '}'");
    while (true) {
      PatternTerm predicate = verb();
      while (true) {
        ast_.where.push_back(TriplePattern{subject, predicate, object()});
        if (!punct(',')) break;
      }
      if (!punct(';')) return;
      while (punct(';')) {
      }
      in_.skip_trivia();
      if (in_.peek() == '.' || in_.peek() == '}') return;
    }
  }

  void modifiers() {
    if (keyword("GROUP")) {
      expect_keyword("BY");
      ast_.group_by.push_back(variable());
      while (at_variable()) ast_.group_by.push_back(variable());
    }
    if (keyword("ORDER")) {
      expect_keyword("BY");
      do {
        OrderKey key;
        if (keyword("ASC")) {
          expect('(');
          key.variable = variable();
          expect(')');
        } else if (keyword("DESC")) {
          expect('(');
          key.variable = variable();
          key.descending = true;
          expect(')');
        } else {
          key.variable = variable();
        }
        ast_.order_by.push_back(std::move(key));
        in_.skip_trivia();
      } while (at_variable() || in_.at_keyword("ASC") || in_.at_keyword("DESC"));
    }
    if (keyword("LIMIT")) {
      in_.skip_trivia();
      if (!std::isdigit(static_cast<unsigned char>(in_.peek()))) in_.fail("expected a non-negative integer");
      size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(in_.peek()))) {
        size_t digit = static_cast<size_t>(in_.peek() - '0');
        if (n > (SIZE_MAX - digit) / 10) in_.fail("LIMIT is too large");
        n = n * 10 + digit;
        in_.advance();
      }
      ast_.limit = n;
    }
  }

  void check() {
    if (ast_.select_all && !ast_.group_by.empty()) in_.fail_at(1, 1, "SELECT * cannot be combined with GROUP BY");
    if (ast_.count) {
      auto vars = ast_.where_variables();
      if (std::find(vars.begin(), vars.end(), ast_.count->alias) != vars.end()) {
        in_.fail_at(1, 1, "aggregate alias ?" + ast_.count->alias + " is already used in WHERE");
      }
    }
    if (ast_.grouped()) {
      for (const auto& v : ast_.projection) {
        if (ast_.count && v == ast_.count->alias) continue;
        if (std::find(ast_.group_by.begin(), ast_.group_by.end(), v) == ast_.group_by.end()) {
          in_.fail_at(1, 1, "?" + v + " is projected but neither grouped nor aggregated");
        }
      }
    }
    std::set<std::string> seen;
    for (const auto& v : ast_.projection) {
      if (!seen.insert(v).second) in_.fail_at(1, 1, "?" + v + " is projected twice");
    }
  }

  Scanner in_;
  QueryAst ast_;
};

}  // namespace

QueryAst parse_query(std::string_view text) {
  if (auto bad = detail::find_invalid_utf8(text)) {
    int line = 1, col = 1;
    for (size_t i = 0; i < *bad; ++i) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (c == '\n') {
        ++line;
        col = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw Error(ErrorCode::kSyntaxError,
                std::to_string(line) + ":" + std::to_string(col) + ": query is not valid UTF-8", line, col);
  }
  try {
    return QueryParser(text).parse();
  } catch (const ScanError& e) {
    throw Error(ErrorCode::kSyntaxError,
                std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message, e.line, e.column);
  } catch (const UnknownPrefix& e) {
    throw Error(ErrorCode::kUnknownPrefix,
                std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message, e.line, e.column);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSyntaxError || e.code() == ErrorCode::kUnknownPrefix) throw;
    throw Error(ErrorCode::kSyntaxError, e.what(), 1, 1);
  }
}

}  // namespace mariner
