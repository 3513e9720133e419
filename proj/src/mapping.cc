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

#include "mariner/mapping.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "mariner/error.h"

namespace mariner {

namespace vocab {
const Iri& p70_documents() {
  static const Iri iri = crm("P70_documents");
  return iri;
}
const Iri& e31_document() {
  static const Iri iri = crm("E31_Document");
  return iri;
}
const Iri& e78_curated_holding() {
  static const Iri iri = crm("E78_Curated_Holding");
  return iri;
}
}  // namespace vocab

namespace {

bool is_unreserved(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~';
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string slug(std::string_view label) {
  static const char* kHex = "0123456789ABCDEF";
  std::string out;
  for (char ch : label) {
    unsigned char c = static_cast<unsigned char>(ch);
    // '_' is escaped so that "a b" and "a_b" stay apart.
    if (c == ' ') {
      out += '_';
    } else if (is_unreserved(c) && c != '_') {
      out += ch;
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

Iri mint_iri(const MintPolicy& policy, std::string_view category, std::string_view label) {
  if (trim(label).empty()) throw Error(ErrorCode::kEmptyLabel, "cannot mint an IRI from an empty label");
  if (category.empty() || !std::all_of(category.begin(), category.end(), [](char c) {
        return is_unreserved(static_cast<unsigned char>(c));
      })) {
    throw Error(ErrorCode::kEmptyLabel, "category must be a non-empty run of unreserved characters");
  }
  return Iri(policy.base + std::string(category) + "/" + slug(label));
}

Iri unknown_placeholder(const MintPolicy& policy, std::string_view category) {
  return mint_iri(policy, category, "unknown");
}

bool is_unknown_placeholder(const MintPolicy& policy, const Iri& iri) {
  const std::string& v = iri.str();
  static const std::string kTail = "/unknown";
  if (v.size() <= policy.base.size() + kTail.size()) return false;
  if (v.compare(0, policy.base.size(), policy.base) != 0) return false;
  if (v.compare(v.size() - kTail.size(), kTail.size(), kTail) != 0) return false;
  std::string_view category(v.data() + policy.base.size(), v.size() - policy.base.size() - kTail.size());
  return category.find('/') == std::string_view::npos;
}

std::string ColumnRef::to_string() const {
  std::string out = table + ".";
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += "+";
    out += columns[i];
  }
  return out;
}

const EntityRule* MappingSpec::entity(std::string_view name) const {
  for (const auto& e : entities) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const LinkRule* MappingSpec::link(std::string_view id) const {
  for (const auto& l : links) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class MappingParser {
 public:
  MappingParser(const OntologySchema& schema) : schema_(schema), prefixes_(default_prefixes()) {}

  MappingSpec parse(std::string_view text) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      ++line_;
      statement(tokenize(text.substr(pos, nl - pos)));
      pos = nl + 1;
    }
    if (spec_.template_id.empty()) {
      throw Error(ErrorCode::kSyntaxError, "missing 'template' declaration", 1, 1);
    }
    check();
    return std::move(spec_);
  }

 private:
  static std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size() || line[i] == '#') break;
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.emplace_back(line.substr(start, i - start));
    }
    return out;
  }

  [[noreturn]] void syntax(const std::string& message) const {
    throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line_) + ": " + message, line_, 1);
  }

  [[noreturn]] void fail(ErrorCode code, int line, const std::string& message) const {
    throw Error(code, "line " + std::to_string(line) + ": " + message, line, 1);
  }

  void statement(const std::vector<std::string>& t) {
    if (t.empty()) return;
    const std::string& kw = t[0];
    if (kw == "template") {
      if (t.size() != 2) syntax("expected 'template <id>'");
      if (!spec_.template_id.empty()) syntax("duplicate template declaration");
      spec_.template_id = t[1];
    } else if (kw == "prefix") {
      if (t.size() != 3 || t[1].empty() || t[1].back() != ':' || t[2].size() < 2 || t[2].front() != '<' ||
          t[2].back() != '>') {
        syntax("expected 'prefix <name>: <iri>'");
      }
      prefixes_[t[1].substr(0, t[1].size() - 1)] = t[2].substr(1, t[2].size() - 2);
    } else if (kw == "entity") {
      entity(t);
    } else if (kw == "link") {
      link(t);
    } else if (kw == "attr") {
      attr(t);
    } else {
      syntax("unknown directive '" + kw + "'");
    }
  }

  Iri curie(const std::string& text) const {
    auto iri = expand_curie(prefixes_, text);
    if (!iri) syntax("cannot resolve '" + text + "'");
    return *iri;
  }

  ColumnRef column_ref(const std::string& text) const {
    auto dot = text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == text.size()) {
      syntax("expected <table>.<column>, got '" + text + "'");
    }
    ColumnRef ref;
    ref.table = text.substr(0, dot);
    std::string rest = text.substr(dot + 1);
    size_t start = 0;
    while (true) {
      size_t plus = rest.find('+', start);
      std::string col = rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
      if (col.empty()) syntax("empty column name in '" + text + "'");
      ref.columns.push_back(col);
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    return ref;
  }

  // "-sealit:voyages->" -> the property CURIE.
  Iri arrow(const std::string& text) const {
    if (text.size() < 4 || text.front() != '-' || text.compare(text.size() - 2, 2, "->") != 0) {
      syntax("expected -<property>-> , got '" + text + "'");
    }
    return curie(text.substr(1, text.size() - 3));
  }

  void entity(const std::vector<std::string>& t) {
    if (t.size() != 8 || t[2] != "from" || t[4] != "as" || t[6] != "category") {
      syntax("expected 'entity <name> from <table>.<column> as <class> category <category>'");
    }
    if (spec_.entity(t[1])) syntax("duplicate entity '" + t[1] + "'");
    EntityRule rule{t[1], column_ref(t[3]), curie(t[5]), t[7], line_};
    if (!std::all_of(rule.category.begin(), rule.category.end(),
                     [](char c) { return is_unreserved(static_cast<unsigned char>(c)); })) {
      syntax("category must be a plain identifier");
    }
    spec_.entities.push_back(std::move(rule));
  }

  void link(const std::vector<std::string>& t) {
    if (t.size() < 4) syntax("expected 'link <entity> -<property>-> <target>'");
    LinkRule rule{"", t[1], arrow(t[2]), std::nullopt, std::nullopt, std::nullopt, MissingPolicy::kSkip,
                  line_};
    size_t i = 3;
    if (t[i] == "literal") {
      if (i + 1 >= t.size()) syntax("expected <table>.<column> after 'literal'");
      rule.literal_column = column_ref(t[i + 1]);
      if (rule.literal_column->columns.size() != 1) syntax("a literal takes a single column");
      i += 2;
      if (i < t.size() && t[i].rfind("^^", 0) == 0) {
        rule.datatype = curie(t[i].substr(2));
        ++i;
      }
    } else {
      rule.target_entity = t[i];
      ++i;
    }
    while (i < t.size()) {
      if (t[i] == "missing:" || t[i].rfind("missing:", 0) == 0) {
        std::string value = t[i].size() > 8 ? t[i].substr(8) : (i + 1 < t.size() ? t[++i] : "");
        if (value == "skip") {
          rule.missing = MissingPolicy::kSkip;
        } else if (value == "unknown") {
          rule.missing = MissingPolicy::kUnknown;
        } else {
          syntax("missing policy must be 'skip' or 'unknown'");
        }
        ++i;
      } else if (t[i] == "id") {
        if (i + 1 >= t.size()) syntax("expected a name after 'id'");
        rule.id = t[i + 1];
        i += 2;
      } else {
        syntax("unexpected '" + t[i] + "'");
      }
    }
    if (rule.literal_column && rule.missing == MissingPolicy::kUnknown) {
      syntax("'missing: unknown' applies to entity targets only");
    }
    if (rule.id.empty()) rule.id = rule.source + "." + std::string(rule.property.local_name());
    if (spec_.link(rule.id)) syntax("duplicate link id '" + rule.id + "'");
    spec_.links.push_back(std::move(rule));
  }

  void attr(const std::vector<std::string>& t) {
    if (t.size() != 4) syntax("expected 'attr <link> -<property>-> <table>.<column>|<entity>'");
    AttrRule rule{t[1], arrow(t[2]), std::nullopt, std::nullopt, line_};
    if (t[3].find('.') != std::string::npos) {
      rule.column = column_ref(t[3]);
    } else {
      rule.entity = t[3];
    }
    spec_.attrs.push_back(std::move(rule));
  }

  const PropertyDef& property(const Iri& p, int line) const {
    if (!schema_.has_property(p)) fail(ErrorCode::kUnknownProperty, line, "unknown property " + p.str());
    return schema_.property(p);
  }

  void require_class(const Iri& c, int line) const {
    if (!schema_.has_class(c)) fail(ErrorCode::kUnknownClass, line, "unknown class " + c.str());
  }

  // Schema checks run once every rule is known, so rules may appear in any
  // order.
  void check() const {
    for (const auto& e : spec_.entities) require_class(e.class_iri, e.line);
    for (const auto& l : spec_.links) {
      const EntityRule* src = spec_.entity(l.source);
      if (!src) fail(ErrorCode::kSyntaxError, l.line, "unknown entity '" + l.source + "'");
      const PropertyDef& p = property(l.property, l.line);
      if (!schema_.is_subclass_of(src->class_iri, p.domain)) {
        fail(ErrorCode::kDomainRangeIncompatible, l.line,
             src->class_iri.str() + " is not within the domain of " + p.id.str());
      }
      if (l.target_entity) {
        const EntityRule* tgt = spec_.entity(*l.target_entity);
        if (!tgt) fail(ErrorCode::kSyntaxError, l.line, "unknown entity '" + *l.target_entity + "'");
        if (p.literal_range) {
          fail(ErrorCode::kDomainRangeIncompatible, l.line, p.id.str() + " takes a literal value");
        }
        if (!schema_.is_subclass_of(tgt->class_iri, p.range)) {
          fail(ErrorCode::kDomainRangeIncompatible, l.line,
               tgt->class_iri.str() + " is not within the range of " + p.id.str());
        }
      } else if (!p.literal_range) {
        fail(ErrorCode::kDomainRangeIncompatible, l.line, p.id.str() + " takes an entity value");
      }
    }
    for (const auto& a : spec_.attrs) {
      const LinkRule* l = spec_.link(a.link);
      if (!l) fail(ErrorCode::kSyntaxError, a.line, "unknown link '" + a.link + "'");
      const PropertyClassDef* pc = schema_.property_class_for(l->property);
      if (!pc) {
        fail(ErrorCode::kUnknownPropertyClass, a.line, "no property class reifies " + l->property.str());
      }
      if (std::find(pc->attributes.begin(), pc->attributes.end(), a.property) == pc->attributes.end()) {
        fail(ErrorCode::kUnknownAttribute, a.line,
             a.property.str() + " is not an attribute of " + pc->id.str());
      }
      const PropertyDef& ap = property(a.property, a.line);
      if (a.entity) {
        const EntityRule* e = spec_.entity(*a.entity);
        if (!e) fail(ErrorCode::kSyntaxError, a.line, "unknown entity '" + *a.entity + "'");
        if (ap.literal_range || !schema_.is_subclass_of(e->class_iri, ap.range)) {
          fail(ErrorCode::kDomainRangeIncompatible, a.line,
               e->class_iri.str() + " is not within the range of " + ap.id.str());
        }
      } else {
        if (a.column->columns.size() != 1) fail(ErrorCode::kSyntaxError, a.line, "attr takes a single column");
      }
    }
  }

  const OntologySchema& schema_;
  std::map<std::string, std::string> prefixes_;
  MappingSpec spec_;
  int line_ = 0;
};

}  // namespace

MappingSpec parse_mapping(std::string_view text, const OntologySchema& schema) {
  return MappingParser(schema).parse(text);
}

// ---------------------------------------------------------------------------
// Application

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class MappingApplier {
 public:
  MappingApplier(const MappingSpec& spec, const RecordBundle& bundle, const OntologySchema& schema,
                 const MintPolicy& policy)
      : spec_(spec), bundle_(bundle), schema_(schema), policy_(policy) {}

  Graph run() {
    if (bundle_.template_id != spec_.template_id) {
      throw Error(ErrorCode::kTemplateMismatch, bundle_.origin + ": record uses template '" +
                                                    bundle_.template_id + "', mapping is for '" +
                                                    spec_.template_id + "'");
    }
    record_ = mint_iri(policy_, "record", bundle_.record_id);
    Iri source = mint_iri(policy_, "source", bundle_.source_label);
    typed(record_, vocab::e31_document(), bundle_.record_id);
    typed(source, vocab::e78_curated_holding(), bundle_.source_label);
    graph_.insert(record_, vocab::p70_documents(), source);

    for (const auto& e : spec_.entities) entities(e);
    for (const auto& l : spec_.links) link(l);
    return std::move(graph_);
  }

 private:
  struct Node {
    Iri iri;
    std::string label;
  };

  const Table& table(const std::string& name) const {
    auto it = bundle_.tables.find(name);
    if (it == bundle_.tables.end()) {
      throw Error(ErrorCode::kMissingTable,
                  "missing table " + (std::filesystem::path(bundle_.origin) / (name + ".csv")).string());
    }
    return it->second;
  }

  std::vector<int> columns(const ColumnRef& ref) const {
    const Table& t = table(ref.table);
    std::vector<int> out;
    for (const auto& c : ref.columns) {
      int idx = t.column(c);
      if (idx < 0) {
        throw Error(ErrorCode::kMalformedRow,
                    (std::filesystem::path(bundle_.origin) / (ref.table + ".csv")).string() +
                        ": no column '" + c + "'");
      }
      out.push_back(idx);
    }
    return out;
  }

  // Present cells joined with a space; nullopt when every cell is absent.
  std::optional<std::string> value(const ColumnRef& ref, size_t row) const {
    const Table& t = table(ref.table);
    std::string out;
    bool any = false;
    for (int idx : columns(ref)) {
      const auto& cell = t.rows[row][idx];
      if (!cell) continue;
      if (any) out += ' ';
      out += *cell;
      any = true;
    }
    if (!any) return std::nullopt;
    return out;
  }

  void typed(const Iri& node, const Iri& cls, const std::string& label) {
    graph_.insert(node, vocab::rdf_type(), cls);
    graph_.insert(node, vocab::rdfs_label(), Literal(label));
    if (node != record_) graph_.insert(record_, vocab::p70_documents(), node);
  }

  void entities(const EntityRule& rule) {
    const Table& t = table(rule.key.table);
    auto& nodes = nodes_[rule.name];
    nodes.resize(t.rows.size());
    for (size_t r = 0; r < t.rows.size(); ++r) {
      auto label = value(rule.key, r);
      if (!label) continue;
      Node n{mint_iri(policy_, rule.category, *label), *label};
      typed(n.iri, rule.class_iri, n.label);
      nodes[r] = std::move(n);
    }
  }

  // Row pairs for a link between two tables: aligned within one table, every
  // combination across two.
  static std::vector<std::pair<size_t, size_t>> pairs(const std::string& a, size_t na,
                                                      const std::string& b, size_t nb) {
    std::vector<std::pair<size_t, size_t>> out;
    if (a == b) {
      for (size_t i = 0; i < na; ++i) out.emplace_back(i, i);
    } else {
      for (size_t i = 0; i < na; ++i) {
        for (size_t j = 0; j < nb; ++j) out.emplace_back(i, j);
      }
    }
    return out;
  }

  void link(const LinkRule& rule) {
    const EntityRule& src_rule = *spec_.entity(rule.source);
    const Table& src_table = table(src_rule.key.table);
    const std::string& tgt_table_name =
        rule.target_entity ? spec_.entity(*rule.target_entity)->key.table : rule.literal_column->table;
    const Table& tgt_table = table(tgt_table_name);
    if (rule.literal_column) columns(*rule.literal_column);

    std::vector<const AttrRule*> attrs;
    for (const auto& a : spec_.attrs) {
      if (a.link == rule.id) attrs.push_back(&a);
    }

    for (auto [i, j] : pairs(src_rule.key.table, src_table.rows.size(), tgt_table_name, tgt_table.rows.size())) {
      const auto& src = nodes_[src_rule.name][i];
      if (!src) continue;
      Term object = vocab::rdf_type();
      std::string object_label;
      if (rule.target_entity) {
        const EntityRule& tgt_rule = *spec_.entity(*rule.target_entity);
        const auto& tgt = nodes_[tgt_rule.name][j];
        if (tgt) {
          object = tgt->iri;
          object_label = tgt->label;
        } else if (rule.missing == MissingPolicy::kUnknown) {
          Iri placeholder = unknown_placeholder(policy_, tgt_rule.category);
          typed(placeholder, tgt_rule.class_iri, "unknown");
          object = placeholder;
          object_label = "unknown";
        } else {
          continue;
        }
      } else {
        auto v = value(*rule.literal_column, j);
        if (!v) continue;
        object = rule.datatype ? Term(Literal(*v, *rule.datatype)) : Term(Literal(*v));
        object_label = *v;
      }

      if (attrs.empty()) {
        graph_.insert(src->iri, rule.property, object);
        continue;
      }
      std::vector<std::pair<Iri, Term>> values;
      for (const AttrRule* a : attrs) {
        if (auto v = attr_value(*a, src_rule.key.table, i, tgt_table_name, j)) values.emplace_back(a->property, *v);
      }
      const PropertyClassDef& pc = *schema_.property_class_for(rule.property);
      Iri node = mint_iri(policy_, pc.id.local_name(), src->label + " " + object_label);
      for (const Triple& t : schema_.reify(src->iri, rule.property, object, values, node)) graph_.insert(t);
      graph_.insert(node, vocab::rdfs_label(), Literal(src->label + " " + object_label));
      graph_.insert(record_, vocab::p70_documents(), node);
    }
  }

  std::optional<Term> attr_value(const AttrRule& a, const std::string& src_table, size_t i,
                                 const std::string& tgt_table, size_t j) {
    const PropertyDef& ap = schema_.property(a.property);
    if (a.entity) {
      const EntityRule& e = *spec_.entity(*a.entity);
      size_t row;
      if (e.key.table == src_table) {
        row = i;
      } else if (e.key.table == tgt_table) {
        row = j;
      } else {
        throw Error(ErrorCode::kMalformedRow, "attr entity '" + e.name + "' is not in a table of its link");
      }
      const auto& n = nodes_[e.name][row];
      if (!n) return std::nullopt;
      return Term(n->iri);
    }
    const ColumnRef& ref = *a.column;
    size_t row;
    if (ref.table == src_table) {
      row = i;
    } else if (ref.table == tgt_table) {
      row = j;
    } else {
      throw Error(ErrorCode::kMalformedRow, "attr column " + ref.to_string() + " is not in a table of its link");
    }
    columns(ref);
    auto v = value(ref, row);
    if (!v) return std::nullopt;
    if (ap.literal_range) return Term(Literal(*v));
    Iri node = mint_iri(policy_, lowercase(ap.range.local_name()), *v);
    typed(node, ap.range, *v);
    return Term(node);
  }

  const MappingSpec& spec_;
  const RecordBundle& bundle_;
  const OntologySchema& schema_;
  const MintPolicy& policy_;
  Graph graph_;
  Iri record_ = vocab::rdf_type();
  std::map<std::string, std::vector<std::optional<Node>>> nodes_;
};

}  // namespace

MappingResult apply_mapping(const MappingSpec& spec, const RecordBundle& bundle, const OntologySchema& schema,
                            const MintPolicy& policy) {
  MappingResult result;
  result.graph = MappingApplier(spec, bundle, schema, policy).run();
  result.violations = schema.validate(result.graph);
  return result;
}

}  // namespace mariner
