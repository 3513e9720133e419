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
#include <set>
#include <string>
#include <vector>

#include "mariner/graph.h"
#include "mariner/term.h"

namespace mariner {

enum class Origin { kSealit, kCrm };

struct ClassDef {
  Iri id;
  std::string label;
  std::set<Iri> direct_superclasses;
  Origin origin = Origin::kSealit;
  // Reification classes ("PC works at") are classes in RDF but not part of
  // the ontology's class count.
  bool property_class = false;
};

enum class PropertyKind {
  kDeclared,   // a row of the property hierarchy
  kInverse,    // the parenthesised inverse of a declared property
  kAttribute,  // a property of a property, attached to a property class
};

struct PropertyDef {
  Iri id;
  std::string label;
  Iri domain;
  // Declared range class. For literal-valued properties this is E60 Number or
  // E62 String and `literal_range` is set.
  Iri range;
  bool literal_range = false;
  std::set<Iri> direct_superproperties;
  std::optional<Iri> inverse;
  bool symmetric = false;
  Origin origin = Origin::kSealit;
  PropertyKind kind = PropertyKind::kDeclared;
};

struct PropertyClassDef {
  Iri id;
  Iri reifies;
  std::vector<Iri> attributes;
};

enum class Severity { kError, kWarning };

struct Violation {
  enum class Kind {
    kDomain,           // subject typed, but not as the domain
    kRange,            // object typed, but not as the range
    kLiteralExpected,  // literal-ranged property with an IRI object
    kIriExpected,      // object-ranged property with a literal object
    kUntypable,        // subject or object carries no known type
  };
  Triple triple;
  Kind kind;
  Severity severity;
  std::string message;
};

const char* to_string(Violation::Kind kind);

// The sealit: v1.1 vocabulary together with the CIDOC-CRM classes and properties it
// references. Immutable after construction and safe to share across threads.
class OntologySchema {
 public:
  static const OntologySchema& builtin();

  // Builds and validates a schema; throws Error when a reference does not
  // resolve or a hierarchy has a cycle.
  OntologySchema(std::vector<ClassDef> classes, std::vector<PropertyDef> properties,
                 std::vector<PropertyClassDef> property_classes);

  const std::map<Iri, ClassDef>& classes() const { return classes_; }
  const std::map<Iri, PropertyDef>& properties() const { return properties_; }
  const std::map<Iri, PropertyClassDef>& property_classes() const { return property_classes_; }

  bool has_class(const Iri& c) const { return classes_.count(c) > 0; }
  bool has_property(const Iri& p) const { return properties_.count(p) > 0; }
  const ClassDef& class_def(const Iri& c) const;        // kUnknownClass
  const PropertyDef& property(const Iri& p) const;      // kUnknownProperty

  // Strict transitive closures, precomputed at construction.
  const std::set<Iri>& superclasses(const Iri& c) const;     // kUnknownClass
  const std::set<Iri>& subclasses(const Iri& c) const;       // kUnknownClass
  const std::set<Iri>& superproperties(const Iri& p) const;  // kUnknownProperty
  const std::set<Iri>& subproperties(const Iri& p) const;    // kUnknownProperty
  const std::set<Iri>& direct_subproperties(const Iri& p) const;

  // c equals `ancestor` or has it among its superclasses. Unknown classes
  // only subsume themselves.
  bool is_subclass_of(const Iri& c, const Iri& ancestor) const;

  // Property class reifying `base`, if one is registered.
  const PropertyClassDef* property_class_for(const Iri& base) const;

  // Checks every triple whose predicate is a schema property against its
  // domain and range.
  std::vector<Violation> validate(const Graph& graph) const;

  // Property-class reification of (subject, base, object): the typed node,
  // its P01/P02 links, one triple per attribute, and the direct triple.
  std::vector<Triple> reify(const Iri& subject, const Iri& base_property, const Term& object,
                            const std::vector<std::pair<Iri, Term>>& attributes,
                            const Iri& node_id) const;

  // RDFS/OWL rendition: subClassOf, subPropertyOf, domain, range, inverseOf,
  // labels and owl:versionInfo "1.1".
  Graph to_graph() const;

  // Counts over ontology-proper entities (declared, SeaLiT origin).
  size_t sealit_class_count() const;
  size_t sealit_property_count() const;
  size_t sealit_literal_property_count() const;
  size_t symmetric_property_count() const;
  size_t property_of_property_count() const;

 private:
  void check_references() const;
  void compute_closures();

  std::map<Iri, ClassDef> classes_;
  std::map<Iri, PropertyDef> properties_;
  std::map<Iri, PropertyClassDef> property_classes_;
  std::map<Iri, Iri> property_class_by_base_;

  std::map<Iri, std::set<Iri>> superclasses_;
  std::map<Iri, std::set<Iri>> subclasses_;
  std::map<Iri, std::set<Iri>> superproperties_;
  std::map<Iri, std::set<Iri>> subproperties_;
  std::map<Iri, std::set<Iri>> direct_subproperties_;
};

// Ontology IRI formation: namespace + label with spaces replaced by '_'.
// "E21 Person" and "P14 carried out by" go to the CRM namespace.
Iri ontology_iri(const std::string& label);

namespace vocab {
const Iri& p01_has_domain();
const Iri& p02_has_range();
}  // namespace vocab

}  // namespace mariner
