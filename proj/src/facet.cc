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

#include "mariner/facet.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "mariner/error.h"
#include "mariner/mapping.h"

namespace mariner {

using nlohmann::json;

std::vector<FacetCategory> FacetRegistry::builtin_categories() {
  return {
      {"ship", "Ship", {vocab::sealit("Ship")}},
      {"person", "Person", {vocab::crm("E21_Person")}},
      {"legal_body", "Legal Body", {vocab::crm("E74_Group")}},
      {"crew_payment", "Crew Payment", {vocab::sealit("Crew_Payment")}},
      {"place", "Place", {vocab::crm("E53_Place")}},
      {"voyage", "Voyage", {vocab::sealit("Voyage")}},
      {"course", "Course", {vocab::sealit("Course")}},
      {"record", "Record", {vocab::crm("E31_Document")}},
      {"source", "Source", {vocab::crm("E78_Curated_Holding")}},
  };
}

// ---------------------------------------------------------------------------
// Connection config

std::vector<ConnectionDef> parse_connections(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("connections") || !doc["connections"].is_array()) {
    throw Error(ErrorCode::kSyntaxError, "connection config must be an object with a 'connections' array");
  }
  auto prefixes = default_prefixes();
  if (doc.contains("prefixes")) {
    if (!doc["prefixes"].is_object()) throw Error(ErrorCode::kSyntaxError, "'prefixes' must be an object");
    for (auto& [k, v] : doc["prefixes"].items()) {
      if (!v.is_string()) throw Error(ErrorCode::kSyntaxError, "prefix '" + k + "' must map to a string");
      prefixes[k] = v.get<std::string>();
    }
  }
  std::vector<ConnectionDef> out;
  for (const json& c : doc["connections"]) {
    auto field = [&](const char* name) {
      if (!c.is_object() || !c.contains(name) || !c[name].is_string()) {
        throw Error(ErrorCode::kSyntaxError, std::string("connection is missing string field '") + name + "'");
      }
      return c[name].get<std::string>();
    };
    ConnectionDef def{field("id"), field("label"), field("source"), field("target"), {}};
    if (!c.contains("path") || !c["path"].is_array() || c["path"].empty()) {
      throw Error(ErrorCode::kSyntaxError, "connection '" + def.id + "' needs a non-empty 'path' array");
    }
    for (const json& step : c["path"]) {
      if (!step.is_string()) throw Error(ErrorCode::kSyntaxError, "path steps are strings");
      std::string s = step.get<std::string>();
      PathStep ps{vocab::rdf_type(), Direction::kForward};
      if (!s.empty() && s[0] == '^') {
        ps.direction = Direction::kInverse;
        s.erase(0, 1);
      }
      auto iri = expand_curie(prefixes, s);
      if (!iri) throw Error(ErrorCode::kUnknownPrefix, "cannot resolve path step '" + s + "'");
      ps.property = *iri;
      def.path.push_back(std::move(ps));
    }
    out.push_back(std::move(def));
  }
  return out;
}

std::vector<ConnectionDef> load_connections(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_connections(ss.str());
}

// ---------------------------------------------------------------------------
// Registry

FacetRegistry::FacetRegistry(const OntologySchema& schema, std::vector<ConnectionDef> connections)
    : schema_(&schema), categories_(builtin_categories()), connections_(std::move(connections)) {
  for (size_t i = 0; i < connections_.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (connections_[i].source == connections_[j].source && connections_[i].id == connections_[j].id) {
        throw Error(ErrorCode::kTypeMismatch, "duplicate connection '" + connections_[i].id + "'");
      }
    }
    type_check(connections_[i]);
  }
}

const FacetCategory& FacetRegistry::category(std::string_view id) const {
  for (const auto& c : categories_) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::kUnknownCategory, "unknown category '" + std::string(id) + "'");
}

const ConnectionDef& FacetRegistry::connection(std::string_view category_id, std::string_view id) const {
  category(category_id);
  for (const auto& c : connections_) {
    if (c.source == category_id && c.id == id) return c;
  }
  throw Error(ErrorCode::kUnknownConnection,
              "no connection '" + std::string(id) + "' from category '" + std::string(category_id) + "'");
}

std::vector<const ConnectionDef*> FacetRegistry::connections_from(std::string_view category_id) const {
  category(category_id);
  std::vector<const ConnectionDef*> out;
  for (const auto& c : connections_) {
    if (c.source == category_id) out.push_back(&c);
  }
  return out;
}

namespace {

// Classes are compatible when one subsumes the other: a path may narrow or
// widen the class it walks through.
bool compatible(const OntologySchema& schema, const std::set<Iri>& classes, const Iri& c) {
  return std::any_of(classes.begin(), classes.end(), [&](const Iri& k) {
    return schema.is_subclass_of(k, c) || schema.is_subclass_of(c, k);
  });
}

// Class at the far end of a step, and the class the step starts from.
std::pair<Iri, Iri> step_ends(const PropertyDef& p, Direction d) {
  return d == Direction::kForward ? std::make_pair(p.domain, p.range) : std::make_pair(p.range, p.domain);
}

}  // namespace

void FacetRegistry::type_check(const ConnectionDef& c) const {
  std::set<Iri> current = category(c.source).class_set;
  const FacetCategory& target = category(c.target);
  for (const PathStep& step : c.path) {
    if (!schema_->has_property(step.property)) {
      throw Error(ErrorCode::kUnknownProperty,
                  "connection '" + c.id + "': unknown property " + step.property.str());
    }
    const PropertyDef& p = schema_->property(step.property);
    if (p.literal_range) {
      throw Error(ErrorCode::kTypeMismatch, "connection '" + c.id + "': " + p.id.str() + " has a literal range");
    }
    auto [from, to] = step_ends(p, step.direction);
    if (!compatible(*schema_, current, from)) {
      throw Error(ErrorCode::kTypeMismatch,
                  "connection '" + c.id + "': " + p.id.str() + " cannot follow the previous step");
    }
    current = {to};
  }
  bool ok = std::any_of(target.class_set.begin(), target.class_set.end(),
                        [&](const Iri& t) { return compatible(*schema_, current, t); });
  if (!ok) {
    throw Error(ErrorCode::kTypeMismatch, "connection '" + c.id + "' does not reach category '" + c.target + "'");
  }
}

// ---------------------------------------------------------------------------
// QueryState JSON

namespace {

QueryState state_from_json(const json& j, int depth) {
  if (depth > 32) throw Error(ErrorCode::kSyntaxError, "query state is nested too deeply");
  if (!j.is_object() || !j.contains("root") || !j["root"].is_string()) {
    throw Error(ErrorCode::kSyntaxError, "query state needs a string 'root'");
  }
  QueryState s;
  s.root = j["root"].get<std::string>();
  if (j.contains("clauses")) {
    if (!j["clauses"].is_array()) throw Error(ErrorCode::kSyntaxError, "'clauses' must be an array");
    for (const json& c : j["clauses"]) {
      if (!c.is_object() || !c.contains("connection") || !c["connection"].is_string()) {
        throw Error(ErrorCode::kSyntaxError, "clause needs a string 'connection'");
      }
      Clause clause;
      clause.connection = c["connection"].get<std::string>();
      bool has_instance = c.contains("instance") && !c["instance"].is_null();
      bool has_state = c.contains("state") && !c["state"].is_null();
      if (has_instance && has_state) {
        throw Error(ErrorCode::kSyntaxError, "clause has both 'instance' and 'state'");
      }
      if (has_instance) {
        if (!c["instance"].is_string() || !Iri::is_valid(c["instance"].get<std::string>())) {
          throw Error(ErrorCode::kSyntaxError, "'instance' must be an absolute IRI");
        }
        clause.instance = Iri(c["instance"].get<std::string>());
      }
      if (has_state) clause.state = std::make_shared<QueryState>(state_from_json(c["state"], depth + 1));
      s.clauses.push_back(std::move(clause));
    }
  }
  if (j.contains("groupBy") && !j["groupBy"].is_null()) {
    if (!j["groupBy"].is_string()) throw Error(ErrorCode::kSyntaxError, "'groupBy' must be a string");
    s.group_by = j["groupBy"].get<std::string>();
  }
  return s;
}

json state_to_json(const QueryState& s) {
  json j;
  j["root"] = s.root;
  j["clauses"] = json::array();
  for (const Clause& c : s.clauses) {
    json cj;
    cj["connection"] = c.connection;
    if (c.instance) cj["instance"] = c.instance->str();
    if (c.state) cj["state"] = state_to_json(*c.state);
    j["clauses"].push_back(std::move(cj));
  }
  if (s.group_by) j["groupBy"] = *s.group_by;
  return j;
}

}  // namespace

QueryState parse_query_state(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw Error(ErrorCode::kSyntaxError, "query state is not valid JSON");
  return state_from_json(doc, 0);
}

std::string query_state_to_json(const QueryState& state) { return state_to_json(state).dump(); }

// ---------------------------------------------------------------------------
// Compilation

namespace {

class Compiler {
 public:
  explicit Compiler(const FacetRegistry& registry) : registry_(registry) {}

  QueryAst compile(const QueryState& state) {
    const FacetCategory& root_cat = registry_.category(state.root);
    std::string root = fresh(root_cat.id);
    node(state, root, std::nullopt);
    if (state.clauses.empty()) type_pattern(root, root_cat);

    ast_.distinct = true;
    if (state.group_by) {
      const ConnectionDef& c = registry_.connection(state.root, *state.group_by);
      const FacetCategory& target = registry_.category(c.target);
      std::string g = fresh(target.id);
      follow(root, c.path, Variable{g});
      if (!path_reaches(c, target)) type_pattern(g, target);
      std::string gl = fresh(target.id + "Label");
      add(Variable{g}, Term(vocab::rdfs_label()), Variable{gl});
      ast_.projection = {g, gl, "count"};
      ast_.count = CountSpec{root, false, "count"};
      ast_.group_by = {g, gl};
      ast_.order_by = {OrderKey{gl, false}};
    } else {
      ast_.projection = {root};
    }
    ast_.prefixes = default_prefixes();
    return std::move(ast_);
  }

 private:
  struct Link {
    std::string from;  // variable one step before the node
    PathStep step;     // the step that reached the node
  };

  std::string fresh(const std::string& base) {
    std::string name;
    for (char c : base) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    if (used_.insert(name).second) return name;
    for (int i = 2;; ++i) {
      std::string candidate = name + std::to_string(i);
      if (used_.insert(candidate).second) return candidate;
    }
  }

  void add(PatternTerm s, PatternTerm p, PatternTerm o) {
    ast_.where.push_back(TriplePattern{std::move(s), std::move(p), std::move(o)});
  }

  void emit_step(const std::string& from, const PathStep& step, const PatternTerm& to) {
    if (step.direction == Direction::kForward) {
      add(Variable{from}, Term(step.property), to);
    } else {
      add(to, Term(step.property), Variable{from});
    }
  }

  // Emits `path` from `from` to `to`; returns the variable before the last
  // step.
  std::string follow(const std::string& from, const std::vector<PathStep>& path, const PatternTerm& to,
                     size_t start = 0) {
    std::string cur = from;
    for (size_t i = start; i < path.size(); ++i) {
      if (i + 1 == path.size()) {
        emit_step(cur, path[i], to);
        return cur;
      }
      std::string next = fresh("v");
      emit_step(cur, path[i], Variable{next});
      cur = next;
    }
    return cur;
  }

  // Whether the path's far end already lies within the target category.
  bool path_reaches(const ConnectionDef& c, const FacetCategory& target) const {
    const OntologySchema& schema = registry_.schema();
    const PathStep& last = c.path.back();
    const PropertyDef& p = schema.property(last.property);
    const Iri& end = last.direction == Direction::kForward ? p.range : p.domain;
    return std::any_of(target.class_set.begin(), target.class_set.end(),
                       [&](const Iri& t) { return schema.is_subclass_of(end, t); });
  }

  void type_pattern(const std::string& var, const FacetCategory& cat) {
    add(Variable{var}, Term(vocab::rdf_type()), Term(*cat.class_set.begin()));
  }

  void node(const QueryState& state, const std::string& var, const std::optional<Link>& parent) {
    for (const Clause& clause : state.clauses) {
      const ConnectionDef& c = registry_.connection(state.root, clause.connection);
      const FacetCategory& target = registry_.category(c.target);
      if (clause.state && clause.state->root != c.target) {
        throw Error(ErrorCode::kTypeMismatch, "connection '" + c.id + "' leads to '" + c.target +
                                                  "', but the nested state starts at '" + clause.state->root + "'");
      }
      // A path that first walks back along the step which reached this
      // node shares that step's variable instead of re-deriving it.
      std::string from = var;
      size_t start = 0;
      if (parent && c.path.size() > 1 && c.path[0].property == parent->step.property &&
          c.path[0].direction != parent->step.direction) {
        from = parent->from;
        start = 1;
      }
      if (clause.instance) {
        follow(from, c.path, Term(*clause.instance), start);
        continue;
      }
      std::string t = fresh(target.id);
      std::string before = follow(from, c.path, Variable{t}, start);
      bool leaf = !clause.state || clause.state->clauses.empty();
      if (leaf && !path_reaches(c, target)) type_pattern(t, target);
      if (clause.state) node(*clause.state, t, Link{before, c.path.back()});
    }
  }

  const FacetRegistry& registry_;
  QueryAst ast_;
  std::set<std::string> used_;
};

}  // namespace

QueryAst compile(const QueryState& state, const FacetRegistry& registry) {
  if (state.group_by && !state.clauses.empty()) {
    // Grouping applies to the root; validate it early for a clear message.
    registry.connection(state.root, *state.group_by);
  }
  return Compiler(registry).compile(state);
}

// ---------------------------------------------------------------------------
// Execution

std::string display_label(const Graph& graph, const Iri& iri) {
  std::optional<std::string> best;
  graph.for_each_match(&iri, &vocab::rdfs_label(), nullptr, [&](const Triple& t) {
    if (t.object.is_literal()) {
      best = t.object.literal().lexical();
      return false;  // index order: the smallest label first
    }
    return true;
  });
  if (best) return *best;
  return std::string(iri.local_name());
}

namespace {

bool sort_by_label(const Instance& a, const Instance& b) {
  if (a.label != b.label) return a.label < b.label;
  return a.iri < b.iri;
}

std::set<Iri> instances_of(const Graph& graph, const OntologySchema& schema, const std::set<Iri>& classes) {
  std::set<Iri> closure;
  for (const Iri& c : classes) {
    closure.insert(c);
    if (schema.has_class(c)) {
      const auto& subs = schema.subclasses(c);
      closure.insert(subs.begin(), subs.end());
    }
  }
  std::set<Iri> out;
  for (const Iri& c : closure) {
    Term ct(c);
    graph.for_each_match(nullptr, &vocab::rdf_type(), &ct, [&](const Triple& t) {
      out.insert(t.subject);
      return true;
    });
  }
  return out;
}

}  // namespace

RunResult run(const QueryState& state, const FacetRegistry& registry, const Graph& graph, EntailmentMode mode) {
  QueryAst ast = compile(state, registry);
  BindingsTable table = evaluate(ast, graph, registry.schema(), mode);
  RunResult result;
  if (!state.group_by) {
    for (const auto& row : table.rows) {
      if (!row[0] || !row[0]->is_iri()) continue;
      result.rows.push_back(Instance{row[0]->iri(), display_label(graph, row[0]->iri())});
    }
    std::sort(result.rows.begin(), result.rows.end(), sort_by_label);
    return result;
  }

  result.grouped = true;
  MintPolicy policy;
  std::vector<Bucket> buckets;
  std::map<Iri, size_t> index;
  std::optional<Bucket> unknown;
  for (const auto& row : table.rows) {
    if (!row[0] || !row[0]->is_iri() || !row[2]) continue;
    const Iri& iri = row[0]->iri();
    size_t n = std::stoull(row[2]->lexical());
    if (is_unknown_placeholder(policy, iri)) {
      if (!unknown) unknown = Bucket{"unknown", iri, 0};
      unknown->count += n;
      continue;
    }
    auto it = index.find(iri);
    if (it != index.end()) {
      buckets[it->second].count += n;
      continue;
    }
    index.emplace(iri, buckets.size());
    buckets.push_back(Bucket{row[1] ? row[1]->lexical() : std::string(iri.local_name()), iri, n});
  }
  if (unknown) buckets.push_back(*unknown);
  for (const Bucket& b : buckets) result.aggregation.total += b.count;
  result.aggregation.buckets = std::move(buckets);
  return result;
}

std::vector<Instance> list_instances(const FacetRegistry& registry, const Graph& graph, std::string_view category,
                                     std::string_view prefix, size_t limit) {
  const FacetCategory& cat = registry.category(category);
  if (limit == 0) return {};
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  };
  std::string want = lower(prefix);
  std::vector<Instance> out;
  for (const Iri& iri : instances_of(graph, registry.schema(), cat.class_set)) {
    std::string label = display_label(graph, iri);
    if (lower(label).compare(0, want.size(), want) != 0) continue;
    out.push_back(Instance{iri, std::move(label)});
  }
  std::sort(out.begin(), out.end(), sort_by_label);
  if (out.size() > limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(limit), out.end());
  return out;
}

KbStats compute_stats(const Graph& graph, const OntologySchema& schema) {
  MintPolicy policy;
  auto count = [&](const Iri& cls) {
    size_t n = 0;
    for (const Iri& i : instances_of(graph, schema, {cls})) {
      if (!is_unknown_placeholder(policy, i)) ++n;
    }
    return n;
  };
  KbStats s;
  s.triples = graph.size();
  s.ships = count(vocab::sealit("Ship"));
  s.persons = count(vocab::crm("E21_Person"));
  s.legal_bodies = count(vocab::crm("E74_Group"));
  s.locations = count(vocab::crm("E53_Place"));
  return s;
}

}  // namespace mariner
