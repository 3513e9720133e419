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

#include <map>
#include <set>

#include "doctest.h"
#include "mariner/error.h"
#include "mariner/ontology.h"
#include "test_support.h"

using namespace mariner;
using namespace mariner::testing;

namespace {

std::set<Iri> classes(std::initializer_list<const char*> labels) {
  std::set<Iri> out;
  for (const char* l : labels) out.insert(ontology_iri(l));
  return out;
}

}  // namespace

TEST_CASE("ontology counts") {
  const auto& s = schema();
  CHECK(s.sealit_class_count() == 46);
  CHECK(s.sealit_property_count() == 79);
  CHECK(s.sealit_literal_property_count() == 7);
  CHECK(s.symmetric_property_count() == 1);
  CHECK(s.property_of_property_count() == 4);
}

TEST_CASE("iri formation") {
  CHECK(ontology_iri("Ship Ownership Phase") == Iri("http://www.sealitproject.eu/ontology/Ship_Ownership_Phase"));
  CHECK(ontology_iri("P14 carried out by") == Iri("http://www.cidoc-crm.org/cidoc-crm/P14_carried_out_by"));
  CHECK(ontology_iri("E21 Person") == crm("E21_Person"));
}

TEST_CASE("superclass chains") {
  const auto& s = schema();
  CHECK(s.superclasses(ontology_iri("Shareholding")) ==
        classes({"Ship Ownership Phase", "Legal Object Relationship", "E1 CRM Entity"}));
  CHECK(s.superclasses(ontology_iri("E1 CRM Entity")).empty());
  CHECK(s.superclasses(ontology_iri("Crew Payment")) ==
        classes({"Money for Labour", "Money for Service", "E7 Activity", "E5 Event", "E4 Period",
                 "E2 Temporal Entity", "E1 CRM Entity"}));
  CHECK(s.superclasses(ontology_iri("Tonnage")) == classes({"E54 Dimension", "E1 CRM Entity"}));
  // Ship gains E18/E72 through the extra CRM inheritance of E24.
  CHECK(s.superclasses(ontology_iri("Ship")) ==
        classes({"E22 Human-Made Object", "E24 Physical Human-Made Thing", "E71 Human-Made Thing",
                 "E70 Thing", "E77 Persistent Item", "E1 CRM Entity", "E18 Physical Thing",
                 "E72 Legal Object"}));
  CHECK(s.is_subclass_of(ontology_iri("Ship"), ontology_iri("Ship")));
  CHECK_FALSE(s.is_subclass_of(ontology_iri("E1 CRM Entity"), ontology_iri("Ship")));
  CHECK_THROWS_AS(s.superclasses(Iri("http://example.org/Nope")), Error);
}

TEST_CASE("superproperties") {
  const auto& s = schema();
  CHECK(s.superproperties(sealit("has_tonnage")) == std::set<Iri>{crm("P43_has_dimension")});
  CHECK(s.subproperties(sealit("has_tonnage")).empty());
  CHECK(s.superproperties(sealit("employment_provided_by")) ==
        std::set<Iri>{sealit("service_provided_by"), crm("P14_carried_out_by"), crm("P11_had_participant"),
                      crm("P12_occurred_in_the_presence_of")});
}

TEST_CASE("P9 subproperties") {
  std::set<Iri> want = {sealit("consists_of_leaving"), sealit("consists_of_arrival"),
                        sealit("consists_of_passing"), sealit("consists_of_loading"),
                        sealit("consists_of_unloading")};
  CHECK(schema().subproperties(crm("P9_consists_of")) == want);
}

TEST_CASE("closures equal one-step expansion to fixpoint") {
  const auto& s = schema();
  for (const auto& [id, def] : s.classes()) {
    std::set<Iri> reach;
    std::vector<Iri> todo(def.direct_superclasses.begin(), def.direct_superclasses.end());
    while (!todo.empty()) {
      Iri c = todo.back();
      todo.pop_back();
      if (!reach.insert(c).second) continue;
      for (const Iri& up : s.class_def(c).direct_superclasses) todo.push_back(up);
    }
    CHECK_MESSAGE(s.superclasses(id) == reach, id.str());
    // Closing the closure again adds nothing.
    std::set<Iri> again = reach;
    for (const Iri& c : reach) again.insert(s.superclasses(c).begin(), s.superclasses(c).end());
    CHECK(again == reach);
    CHECK(reach.count(id) == 0);  // acyclic
  }
  for (const auto& [id, def] : s.properties()) {
    std::set<Iri> reach;
    std::vector<Iri> todo(def.direct_superproperties.begin(), def.direct_superproperties.end());
    while (!todo.empty()) {
      Iri p = todo.back();
      todo.pop_back();
      if (!reach.insert(p).second) continue;
      for (const Iri& up : s.property(p).direct_superproperties) todo.push_back(up);
    }
    CHECK_MESSAGE(s.superproperties(id) == reach, id.str());
    CHECK(reach.count(id) == 0);
    for (const Iri& up : reach) CHECK(s.subproperties(up).count(id) == 1);
  }
}

TEST_CASE("every sealit class reaches a crm ancestor") {
  const auto& s = schema();
  for (const auto& [id, def] : s.classes()) {
    if (def.origin != Origin::kSealit) continue;
    bool crm_ancestor = false;
    for (const Iri& up : s.superclasses(id)) crm_ancestor |= s.class_def(up).origin == Origin::kCrm;
    CHECK_MESSAGE(crm_ancestor, id.str());
  }
}

TEST_CASE("inverses are involutions with swapped domain and range") {
  const auto& s = schema();
  for (const auto& [id, def] : s.properties()) {
    if (def.symmetric) CHECK(def.domain == def.range);
    if (!def.inverse) continue;
    const PropertyDef& inv = s.property(*def.inverse);
    REQUIRE(inv.inverse.has_value());
    CHECK(*inv.inverse == id);
    CHECK(inv.domain == def.range);
    CHECK(inv.range == def.domain);
    CHECK_FALSE(def.literal_range);
  }
}

TEST_CASE("domain and range rows") {
  const auto& s = schema();
  struct Row {
    const char* property;
    const char* domain;
    const char* range;
  };
  for (Row r : {Row{"has tonnage", "Ship", "Tonnage"}, Row{"constructed", "Ship Construction", "Ship"},
                Row{"voyage of", "Voyage", "Ship"}, Row{"finally arriving at", "Voyage", "E53 Place"},
                Row{"works at", "E21 Person", "E74 Group"}, Row{"has first name", "E21 Person", "E62 String"},
                Row{"P12 occurred in the presence of", "E63 Beginning of Existence", "E77 Persistent Item"}}) {
    const PropertyDef& d = s.property(ontology_iri(r.property));
    CHECK_MESSAGE(d.domain == ontology_iri(r.domain), r.property);
    CHECK_MESSAGE(d.range == ontology_iri(r.range), r.property);
  }
  CHECK(s.property(sealit("has_first_name")).literal_range);
  CHECK(s.property(sealit("related_to")).symmetric);
}

TEST_CASE("duplicate has owner row is one property") {
  size_t n = 0;
  for (const auto& [id, def] : schema().properties()) n += def.label == "has owner";
  CHECK(n == 1);
}

TEST_CASE("validate") {
  const auto& s = schema();
  CHECK(s.validate(Graph{}).empty());

  Graph bad;
  Iri person("http://x/person1"), ton("http://x/t1");
  bad.insert(person, vocab::rdf_type(), crm("E21_Person"));
  bad.insert(person, sealit("has_tonnage"), ton);
  auto v = s.validate(bad);
  size_t domain = 0;
  for (const auto& x : v) domain += x.kind == Violation::Kind::kDomain;
  CHECK(domain == 1);

  Graph good;
  Iri ship("http://x/ship1");
  good.insert(ship, vocab::rdf_type(), sealit("Ship"));
  good.insert(ship, sealit("has_tonnage"), ton);
  good.insert(ton, vocab::rdf_type(), sealit("Tonnage"));
  CHECK(s.validate(good).empty());

  Graph literal_mismatch;
  literal_mismatch.insert(person, vocab::rdf_type(), crm("E21_Person"));
  literal_mismatch.insert(person, sealit("has_first_name"), Iri("http://x/name"));
  literal_mismatch.insert(person, crm("P74_has_current_or_former_residence"), Literal("Camogli"));
  auto lv = s.validate(literal_mismatch);
  REQUIRE(lv.size() == 2);
  std::set<Violation::Kind> kinds{lv[0].kind, lv[1].kind};
  CHECK(kinds == std::set<Violation::Kind>{Violation::Kind::kLiteralExpected, Violation::Kind::kIriExpected});
  for (const auto& x : lv) CHECK(x.severity == Severity::kError);
}

TEST_CASE("validate accepts subclass instances for the domain") {
  Graph g;
  Iri voyage("http://x/v"), p("http://x/p");
  g.insert(voyage, vocab::rdf_type(), sealit("Voyage"));
  g.insert(p, vocab::rdf_type(), crm("E21_Person"));
  // P14's domain is E7 Activity, range E39 Actor.
  g.insert(voyage, crm("P14_carried_out_by"), p);
  CHECK(schema().validate(g).empty());
}

TEST_CASE("reify works at with a role") {
  Iri node = kb("PC_works_at/x"), person = kb("person/p1"), group = kb("legal_body/g1");
  Iri role = kb("profession/mechanic");
  auto ts = schema().reify(person, sealit("works_at"), group, {{sealit("in_the_role_of"), role}}, node);
  std::set<Triple> got(ts.begin(), ts.end());
  std::set<Triple> want = {
      {node, vocab::rdf_type(), Term(sealit("PC_works_at"))},
      {node, vocab::p01_has_domain(), Term(person)},
      {node, vocab::p02_has_range(), Term(group)},
      {node, sealit("in_the_role_of"), Term(role)},
      {person, sealit("works_at"), Term(group)},
  };
  CHECK(got == want);
  CHECK(ts.size() == 5);

  auto bare = schema().reify(person, sealit("works_at"), group, {}, node);
  CHECK(bare.size() == 4);

  // Reifying twice into one graph adds nothing the second time.
  Graph g;
  for (const auto& t : ts) g.insert(t);
  for (const auto& t : ts) CHECK_FALSE(g.insert(t));
}

TEST_CASE("reify rejects unregistered properties and attributes") {
  Iri n("http://x/n"), a("http://x/a"), b("http://x/b");
  CHECK_THROWS_AS(schema().reify(a, sealit("voyages"), b, {}, n), Error);
  try {
    schema().reify(a, sealit("works_at"), b, {{sealit("has_first_name"), Literal("x")}}, n);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownAttribute);
  }
}

TEST_CASE("property classes") {
  const auto& s = schema();
  const PropertyClassDef* pc = s.property_class_for(sealit("works_at"));
  REQUIRE(pc != nullptr);
  CHECK(pc->id == sealit("PC_works_at"));
  CHECK(pc->attributes == std::vector<Iri>{sealit("in_the_role_of")});
  CHECK(s.property_class_for(sealit("voyages")) == nullptr);
}

TEST_CASE("schema construction rejects cycles and dangling references") {
  Iri a("http://x/A"), b("http://x/B");
  std::vector<ClassDef> cyclic = {{a, "A", {b}, Origin::kSealit, false}, {b, "B", {a}, Origin::kSealit, false}};
  CHECK_THROWS_AS(OntologySchema(cyclic, {}, {}), Error);
  std::vector<ClassDef> dangling = {{a, "A", {b}, Origin::kSealit, false}};
  CHECK_THROWS_AS(OntologySchema(dangling, {}, {}), Error);
}

TEST_CASE("export carries version and hierarchy") {
  Graph g = schema().to_graph();
  Iri owl_version("http://www.w3.org/2002/07/owl#versionInfo");
  bool version = false;
  for (const Triple& t : g) version |= t.predicate == owl_version && t.object == Term(Literal("1.1"));
  CHECK(version);
  Iri sub_class_of("http://www.w3.org/2000/01/rdf-schema#subClassOf");
  CHECK(g.contains(Triple{ontology_iri("Shareholding"), sub_class_of, Term(ontology_iri("Ship Ownership Phase"))}));
}
