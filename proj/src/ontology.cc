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

#include "mariner/ontology.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "mariner/error.h"
#include "ontology_data.h"

namespace mariner {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> lines_of(const char* text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) out.push_back(line);
  }
  return out;
}

// Strips leading "- " markers and returns the nesting depth.
int take_depth(std::string& line) {
  int depth = 0;
  while (line.size() >= 2 && line[0] == '-' && line[1] == ' ') {
    line.erase(0, 2);
    ++depth;
  }
  line = trim(line);
  return depth;
}

// "E21 Person", "P14 carried out by", "P107i ...", "PC0 ...".
bool is_crm_label(std::string_view label) {
  size_t i = 0;
  if (label.size() >= 2 && label[0] == 'P' && label[1] == 'C') {
    i = 2;
  } else if (!label.empty() && (label[0] == 'E' || label[0] == 'P')) {
    i = 1;
  } else {
    return false;
  }
  size_t digits = i;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  if (i == digits) return false;
  if (i < label.size() && label[i] == 'i') ++i;
  return i == label.size() || label[i] == ' ';
}

Origin origin_of(std::string_view label) {
  return is_crm_label(label) ? Origin::kCrm : Origin::kSealit;
}

bool is_literal_class(const Iri& c) {
  return c == vocab::crm("E60_Number") || c == vocab::crm("E62_String");
}

struct BuiltinData {
  std::vector<ClassDef> classes;
  std::vector<PropertyDef> properties;
  std::vector<PropertyClassDef> property_classes;
};

BuiltinData parse_builtin() {
  BuiltinData data;
  std::map<Iri, size_t> class_index;

  auto add_class = [&](const std::string& label) -> ClassDef& {
    Iri id = ontology_iri(label);
    auto it = class_index.find(id);
    if (it != class_index.end()) return data.classes[it->second];
    class_index.emplace(id, data.classes.size());
    data.classes.push_back(ClassDef{id, label, {}, origin_of(label), false});
    return data.classes.back();
  };

  std::vector<Iri> stack;
  for (std::string line : lines_of(data::kClassHierarchy)) {
    int depth = take_depth(line);
    ClassDef& def = add_class(line);
    Iri id = def.id;
    if (depth > static_cast<int>(stack.size())) {
      throw Error(ErrorCode::kUnknownClass, "class hierarchy skips a level at " + line);
    }
    while (static_cast<int>(stack.size()) > depth) stack.pop_back();
    if (!stack.empty()) def.direct_superclasses.insert(stack.back());
    stack.push_back(id);
  }
  for (const std::string& line : lines_of(data::kExtraClassLinks)) {
    auto parts = split(line, '<');
    ClassDef& child = add_class(parts[0]);
    if (parts.size() > 1) child.direct_superclasses.insert(ontology_iri(parts[1]));
  }

  std::set<std::string> symmetric;
  for (const std::string& s : split(data::kSymmetricProperties, ',')) symmetric.insert(s);

  std::vector<std::pair<Iri, std::optional<Iri>>> prop_stack;  // (id, inverse id)
  std::vector<PropertyDef> inverses;
  for (std::string line : lines_of(data::kPropertyHierarchy)) {
    int depth = take_depth(line);
    auto cols = split(line, '|');
    if (cols.size() != 4) throw Error(ErrorCode::kUnknownProperty, "bad property row: " + line);
    PropertyDef def{ontology_iri(cols[0]), cols[0], ontology_iri(cols[2]), ontology_iri(cols[3]), false, {}, {}};
    def.origin = origin_of(cols[0]);
    def.literal_range = is_literal_class(def.range);
    def.symmetric = symmetric.count(cols[0]) > 0;
    if (!cols[1].empty()) def.inverse = ontology_iri(cols[1]);

    if (depth > static_cast<int>(prop_stack.size())) {
      throw Error(ErrorCode::kUnknownProperty, "property hierarchy skips a level at " + line);
    }
    while (static_cast<int>(prop_stack.size()) > depth) prop_stack.pop_back();
    std::optional<Iri> parent_inverse;
    if (!prop_stack.empty()) {
      def.direct_superproperties.insert(prop_stack.back().first);
      parent_inverse = prop_stack.back().second;
    }
    prop_stack.emplace_back(def.id, def.inverse);

    if (def.inverse) {
      PropertyDef inv{*def.inverse, cols[1], def.range, def.domain, false, {}, {}};
      inv.origin = def.origin;
      inv.kind = PropertyKind::kInverse;
      inv.inverse = def.id;
      if (parent_inverse) inv.direct_superproperties.insert(*parent_inverse);
      inverses.push_back(std::move(inv));
    }
    data.properties.push_back(std::move(def));
  }
  for (auto& inv : inverses) data.properties.push_back(std::move(inv));

  for (const std::string& line : lines_of(data::kPropertiesOfProperties)) {
    auto cols = split(line, '|');
    ClassDef& pc = add_class(cols[0]);
    pc.property_class = true;
    pc.direct_superclasses.insert(vocab::crm("PC0_Typed_CRM_Property"));
    PropertyDef attr{ontology_iri(cols[2]), cols[2], pc.id, ontology_iri(cols[3]), false, {}, {}};
    attr.origin = Origin::kSealit;
    attr.kind = PropertyKind::kAttribute;
    attr.literal_range = is_literal_class(attr.range);
    data.property_classes.push_back(PropertyClassDef{pc.id, ontology_iri(cols[1]), {attr.id}});
    data.properties.push_back(std::move(attr));
  }
  return data;
}

// Kahn's algorithm over child -> parents edges; throws on a cycle.
void check_acyclic(const std::map<Iri, std::set<Iri>>& parents, const char* what) {
  std::map<Iri, int> pending;
  std::map<Iri, std::vector<Iri>> children;
  for (const auto& [node, ps] : parents) {
    pending[node] += static_cast<int>(ps.size());
    for (const Iri& p : ps) {
      pending.emplace(p, 0);
      children[p].push_back(node);
    }
  }
  std::vector<Iri> ready;
  for (const auto& [node, n] : pending) {
    if (n == 0) ready.push_back(node);
  }
  size_t visited = 0;
  while (!ready.empty()) {
    Iri node = ready.back();
    ready.pop_back();
    ++visited;
    for (const Iri& c : children[node]) {
      if (--pending[c] == 0) ready.push_back(c);
    }
  }
  if (visited != pending.size()) {
    throw Error(ErrorCode::kTypeMismatch, std::string(what) + " hierarchy contains a cycle");
  }
}

std::map<Iri, std::set<Iri>> close(const std::map<Iri, std::set<Iri>>& direct) {
  std::map<Iri, std::set<Iri>> closure;
  std::function<const std::set<Iri>&(const Iri&)> visit = [&](const Iri& node) -> const std::set<Iri>& {
    auto it = closure.find(node);
    if (it != closure.end()) return it->second;
    std::set<Iri> acc;
    auto dit = direct.find(node);
    if (dit != direct.end()) {
      for (const Iri& p : dit->second) {
        acc.insert(p);
        const auto& up = visit(p);
        acc.insert(up.begin(), up.end());
      }
    }
    return closure.emplace(node, std::move(acc)).first->second;
  };
  for (const auto& entry : direct) visit(entry.first);
  return closure;
}

const std::set<Iri>& empty_set() {
  static const std::set<Iri> s;
  return s;
}

}  // namespace

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kDomain: return "domain";
    case Violation::Kind::kRange: return "range";
    case Violation::Kind::kLiteralExpected: return "literal-expected";
    case Violation::Kind::kIriExpected: return "iri-expected";
    case Violation::Kind::kUntypable: return "untypable";
  }
  return "violation";
}

Iri ontology_iri(const std::string& label) {
  std::string local = label;
  std::replace(local.begin(), local.end(), ' ', '_');
  return is_crm_label(label) ? vocab::crm(local) : vocab::sealit(local);
}

namespace vocab {
const Iri& p01_has_domain() {
  static const Iri iri = crm("P01_has_domain");
  return iri;
}
const Iri& p02_has_range() {
  static const Iri iri = crm("P02_has_range");
  return iri;
}
}  // namespace vocab

const OntologySchema& OntologySchema::builtin() {
  static const OntologySchema schema = [] {
    BuiltinData d = parse_builtin();
    return OntologySchema(std::move(d.classes), std::move(d.properties),
                          std::move(d.property_classes));
  }();
  return schema;
}

OntologySchema::OntologySchema(std::vector<ClassDef> classes, std::vector<PropertyDef> properties,
                               std::vector<PropertyClassDef> property_classes) {
  for (auto& c : classes) {
    Iri id = c.id;
    if (!classes_.emplace(id, std::move(c)).second) {
      throw Error(ErrorCode::kUnknownClass, "duplicate class " + id.str());
    }
  }
  for (auto& p : properties) {
    Iri id = p.id;
    if (classes_.count(id)) throw Error(ErrorCode::kUnknownProperty, "IRI used twice: " + id.str());
    if (!properties_.emplace(id, std::move(p)).second) {
      throw Error(ErrorCode::kUnknownProperty, "duplicate property " + id.str());
    }
  }
  for (auto& pc : property_classes) {
    property_class_by_base_.emplace(pc.reifies, pc.id);
    Iri id = pc.id;
    property_classes_.emplace(id, std::move(pc));
  }
  check_references();
  compute_closures();
}

void OntologySchema::check_references() const {
  for (const auto& [id, c] : classes_) {
    for (const Iri& s : c.direct_superclasses) {
      if (!classes_.count(s)) throw Error(ErrorCode::kUnknownClass, id.str() + " extends unknown " + s.str());
    }
  }
  for (const auto& [id, p] : properties_) {
    if (!classes_.count(p.domain)) throw Error(ErrorCode::kUnknownClass, "domain of " + id.str() + ": " + p.domain.str());
    if (!classes_.count(p.range)) throw Error(ErrorCode::kUnknownClass, "range of " + id.str() + ": " + p.range.str());
    for (const Iri& s : p.direct_superproperties) {
      if (!properties_.count(s)) throw Error(ErrorCode::kUnknownProperty, id.str() + " extends unknown " + s.str());
    }
    if (p.inverse) {
      auto it = properties_.find(*p.inverse);
      if (it == properties_.end() || it->second.inverse != id) {
        throw Error(ErrorCode::kUnknownProperty, "inverse of " + id.str() + " is not an involution");
      }
    }
    if (p.symmetric && p.domain != p.range) {
      throw Error(ErrorCode::kTypeMismatch, "symmetric property " + id.str() + " has domain != range");
    }
  }
  for (const auto& [id, pc] : property_classes_) {
    if (!classes_.count(id)) throw Error(ErrorCode::kUnknownClass, "property class " + id.str() + " is not a class");
    if (!properties_.count(pc.reifies)) throw Error(ErrorCode::kUnknownProperty, id.str() + " reifies unknown " + pc.reifies.str());
    for (const Iri& a : pc.attributes) {
      if (!properties_.count(a)) throw Error(ErrorCode::kUnknownAttribute, "unknown attribute " + a.str());
    }
  }
}

void OntologySchema::compute_closures() {
  std::map<Iri, std::set<Iri>> class_parents, class_children, prop_parents, prop_children;
  for (const auto& [id, c] : classes_) {
    class_parents[id] = c.direct_superclasses;
    class_children[id];
    for (const Iri& s : c.direct_superclasses) class_children[s].insert(id);
  }
  for (const auto& [id, p] : properties_) {
    prop_parents[id] = p.direct_superproperties;
    prop_children[id];
    for (const Iri& s : p.direct_superproperties) prop_children[s].insert(id);
  }
  check_acyclic(class_parents, "class");
  check_acyclic(prop_parents, "property");
  superclasses_ = close(class_parents);
  subclasses_ = close(class_children);
  superproperties_ = close(prop_parents);
  subproperties_ = close(prop_children);
  direct_subproperties_ = std::move(prop_children);
}

const ClassDef& OntologySchema::class_def(const Iri& c) const {
  auto it = classes_.find(c);
  if (it == classes_.end()) throw Error(ErrorCode::kUnknownClass, "unknown class " + c.str());
  return it->second;
}

const PropertyDef& OntologySchema::property(const Iri& p) const {
  auto it = properties_.find(p);
  if (it == properties_.end()) throw Error(ErrorCode::kUnknownProperty, "unknown property " + p.str());
  return it->second;
}

const std::set<Iri>& OntologySchema::superclasses(const Iri& c) const {
  auto it = superclasses_.find(c);
  if (it == superclasses_.end()) throw Error(ErrorCode::kUnknownClass, "unknown class " + c.str());
  return it->second;
}

const std::set<Iri>& OntologySchema::subclasses(const Iri& c) const {
  auto it = subclasses_.find(c);
  if (it == subclasses_.end()) throw Error(ErrorCode::kUnknownClass, "unknown class " + c.str());
  return it->second;
}

const std::set<Iri>& OntologySchema::superproperties(const Iri& p) const {
  auto it = superproperties_.find(p);
  if (it == superproperties_.end()) throw Error(ErrorCode::kUnknownProperty, "unknown property " + p.str());
  return it->second;
}

const std::set<Iri>& OntologySchema::subproperties(const Iri& p) const {
  auto it = subproperties_.find(p);
  if (it == subproperties_.end()) throw Error(ErrorCode::kUnknownProperty, "unknown property " + p.str());
  return it->second;
}

const std::set<Iri>& OntologySchema::direct_subproperties(const Iri& p) const {
  auto it = direct_subproperties_.find(p);
  return it == direct_subproperties_.end() ? empty_set() : it->second;
}

bool OntologySchema::is_subclass_of(const Iri& c, const Iri& ancestor) const {
  if (c == ancestor) return true;
  auto it = superclasses_.find(c);
  return it != superclasses_.end() && it->second.count(ancestor) > 0;
}

const PropertyClassDef* OntologySchema::property_class_for(const Iri& base) const {
  auto it = property_class_by_base_.find(base);
  if (it == property_class_by_base_.end()) return nullptr;
  return &property_classes_.at(it->second);
}

std::vector<Violation> OntologySchema::validate(const Graph& graph) const {
  std::vector<Violation> out;
  const Iri& type = vocab::rdf_type();

  auto known_types = [&](const Iri& node) {
    std::vector<Iri> types;
    graph.for_each_match(&node, &type, nullptr, [&](const Triple& t) {
      if (t.object.is_iri() && classes_.count(t.object.iri())) types.push_back(t.object.iri());
      return true;
    });
    return types;
  };
  auto conforms = [&](const std::vector<Iri>& types, const Iri& expected) {
    return std::any_of(types.begin(), types.end(),
                       [&](const Iri& c) { return is_subclass_of(c, expected); });
  };

  for (const Triple& t : graph) {
    auto pit = properties_.find(t.predicate);
    if (pit == properties_.end()) continue;
    const PropertyDef& p = pit->second;
    const std::string& name = p.id.str();

    auto subject_types = known_types(t.subject);
    if (subject_types.empty()) {
      out.push_back({t, Violation::Kind::kUntypable, Severity::kWarning,
                     "subject " + t.subject.str() + " of " + name + " has no known type"});
    } else if (!conforms(subject_types, p.domain)) {
      out.push_back({t, Violation::Kind::kDomain, Severity::kError,
                     "subject " + t.subject.str() + " is not a " + p.domain.str() + " (domain of " + name + ")"});
    }

    if (p.literal_range) {
      if (!t.object.is_literal()) {
        out.push_back({t, Violation::Kind::kLiteralExpected, Severity::kError,
                       name + " expects a literal object"});
      }
      continue;
    }
    if (t.object.is_literal()) {
      out.push_back({t, Violation::Kind::kIriExpected, Severity::kError,
                     name + " expects an IRI object, got " + t.object.to_ntriples()});
      continue;
    }
    auto object_types = known_types(t.object.iri());
    if (object_types.empty()) {
      out.push_back({t, Violation::Kind::kUntypable, Severity::kWarning,
                     "object " + t.object.iri().str() + " of " + name + " has no known type"});
    } else if (!conforms(object_types, p.range)) {
      out.push_back({t, Violation::Kind::kRange, Severity::kError,
                     "object " + t.object.iri().str() + " is not a " + p.range.str() + " (range of " + name + ")"});
    }
  }
  return out;
}

std::vector<Triple> OntologySchema::reify(const Iri& subject, const Iri& base_property,
                                          const Term& object,
                                          const std::vector<std::pair<Iri, Term>>& attributes,
                                          const Iri& node_id) const {
  const PropertyClassDef* pc = property_class_for(base_property);
  if (!pc) {
    throw Error(ErrorCode::kUnknownPropertyClass, "no property class reifies " + base_property.str());
  }
  std::set<Triple> out;
  out.insert(Triple{node_id, vocab::rdf_type(), pc->id});
  out.insert(Triple{node_id, vocab::p01_has_domain(), subject});
  out.insert(Triple{node_id, vocab::p02_has_range(), object});
  for (const auto& [attr, value] : attributes) {
    if (std::find(pc->attributes.begin(), pc->attributes.end(), attr) == pc->attributes.end()) {
      throw Error(ErrorCode::kUnknownAttribute,
                  attr.str() + " is not an attribute of " + pc->id.str());
    }
    out.insert(Triple{node_id, attr, value});
  }
  out.insert(Triple{subject, base_property, object});
  return {out.begin(), out.end()};
}

Graph OntologySchema::to_graph() const {
  Graph g;
  const Iri ontology(std::string(vocab::kSealit));
  const Iri rdfs_class(std::string(vocab::kRdfs) + "Class");
  const Iri rdf_property(std::string(vocab::kRdf) + "Property");
  const Iri sub_class(std::string(vocab::kRdfs) + "subClassOf");
  const Iri sub_property(std::string(vocab::kRdfs) + "subPropertyOf");
  const Iri domain(std::string(vocab::kRdfs) + "domain");
  const Iri range(std::string(vocab::kRdfs) + "range");
  const Iri literal(std::string(vocab::kRdfs) + "Literal");
  const Iri inverse_of(std::string(vocab::kOwl) + "inverseOf");
  const Iri symmetric(std::string(vocab::kOwl) + "SymmetricProperty");

  g.insert(Triple{ontology, vocab::rdf_type(), Iri(std::string(vocab::kOwl) + "Ontology")});
  g.insert(Triple{ontology, Iri(std::string(vocab::kOwl) + "versionInfo"), Literal("1.1")});

  for (const auto& [id, c] : classes_) {
    if (c.origin != Origin::kSealit) continue;
    g.insert(Triple{id, vocab::rdf_type(), rdfs_class});
    g.insert(Triple{id, vocab::rdfs_label(), Literal(c.label)});
    for (const Iri& s : c.direct_superclasses) g.insert(Triple{id, sub_class, s});
  }
  for (const auto& [id, p] : properties_) {
    if (p.origin != Origin::kSealit) continue;
    g.insert(Triple{id, vocab::rdf_type(), rdf_property});
    if (p.symmetric) g.insert(Triple{id, vocab::rdf_type(), symmetric});
    g.insert(Triple{id, vocab::rdfs_label(), Literal(p.label)});
    g.insert(Triple{id, domain, p.domain});
    g.insert(Triple{id, range, p.literal_range ? literal : p.range});
    for (const Iri& s : p.direct_superproperties) g.insert(Triple{id, sub_property, s});
    if (p.inverse) g.insert(Triple{id, inverse_of, *p.inverse});
  }
  return g;
}

size_t OntologySchema::sealit_class_count() const {
  return std::count_if(classes_.begin(), classes_.end(), [](const auto& e) {
    return e.second.origin == Origin::kSealit && !e.second.property_class;
  });
}

size_t OntologySchema::sealit_property_count() const {
  return std::count_if(properties_.begin(), properties_.end(), [](const auto& e) {
    return e.second.origin == Origin::kSealit && e.second.kind == PropertyKind::kDeclared;
  });
}

size_t OntologySchema::sealit_literal_property_count() const {
  return std::count_if(properties_.begin(), properties_.end(), [](const auto& e) {
    return e.second.origin == Origin::kSealit && e.second.kind == PropertyKind::kDeclared &&
           e.second.literal_range;
  });
}

size_t OntologySchema::symmetric_property_count() const {
  return std::count_if(properties_.begin(), properties_.end(), [](const auto& e) {
    return e.second.kind == PropertyKind::kDeclared && e.second.symmetric;
  });
}

size_t OntologySchema::property_of_property_count() const {
  size_t n = 0;
  for (const auto& [id, pc] : property_classes_) n += pc.attributes.size();
  return n;
}

}  // namespace mariner
