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

// Oracles and fixtures shared by the test binaries. The oracles are naive on
// purpose: linear scans, fixpoint materialisation, nested loops.

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mariner/facet.h"
#include "mariner/graph.h"
#include "mariner/mapping.h"
#include "mariner/ontology.h"
#include "mariner/query.h"
#include "mariner/turtle.h"

namespace mariner::testing {

inline std::filesystem::path data_dir() { return MARINER_DATA_DIR; }

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const OntologySchema& schema() { return OntologySchema::builtin(); }

inline Iri kb(const std::string& path) { return Iri("https://rs.sealitproject.eu/kb/" + path); }
inline Iri sealit(const std::string& local) { return vocab::sealit(local); }
inline Iri crm(const std::string& local) { return vocab::crm(local); }

// ---------------------------------------------------------------------------
// Fixture knowledge graph: the three bundles through their mappings.

inline std::vector<std::string> fixture_bundles() {
  return {"crew_list_aurora_1870", "payroll_stella_1871", "naval_register_genoa"};
}

inline std::map<std::string, MappingSpec> fixture_specs() {
  std::map<std::string, MappingSpec> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "fixtures" / "mappings")) {
    MappingSpec spec = parse_mapping(read_text(entry.path()), schema());
    std::string id = spec.template_id;
    out.emplace(id, std::move(spec));
  }
  return out;
}

inline Graph fixture_kb() {
  auto specs = fixture_specs();
  Graph g;
  for (const auto& name : fixture_bundles()) {
    RecordBundle b = load_bundle(data_dir() / "fixtures" / "records" / name);
    g.insert_all(apply_mapping(specs.at(b.template_id), b, schema()).graph);
  }
  return g;
}

inline FacetRegistry fixture_registry() {
  return FacetRegistry(schema(), load_connections(data_dir() / "connections.json"));
}

// ---------------------------------------------------------------------------
// Linear-scan match.

inline std::vector<Triple> scan(const Graph& g, const std::optional<Iri>& s, const std::optional<Iri>& p,
                                const std::optional<Term>& o) {
  std::vector<Triple> out;
  for (const Triple& t : g) {
    if (s && t.subject != *s) continue;
    if (p && t.predicate != *p) continue;
    if (o && t.object != *o) continue;
    out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Materialisation: apply one-step rules until nothing changes. Uses only the
// direct (unclosed) hierarchy links.

inline Graph materialize(const Graph& g, const OntologySchema& s) {
  std::set<Triple> all(g.begin(), g.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Triple> add;
    for (const Triple& t : all) {
      if (t.predicate == vocab::rdf_type()) {
        if (t.object.is_iri() && s.has_class(t.object.iri())) {
          for (const Iri& sup : s.class_def(t.object.iri()).direct_superclasses) {
            add.push_back(Triple{t.subject, t.predicate, Term(sup)});
          }
        }
        continue;
      }
      if (!s.has_property(t.predicate)) continue;
      const PropertyDef& d = s.property(t.predicate);
      for (const Iri& sup : d.direct_superproperties) add.push_back(Triple{t.subject, sup, t.object});
      if (t.object.is_iri()) {
        if (d.inverse) add.push_back(Triple{t.object.iri(), *d.inverse, Term(t.subject)});
        if (d.symmetric) add.push_back(Triple{t.object.iri(), t.predicate, Term(t.subject)});
      }
    }
    for (const Triple& t : add) changed |= all.insert(t).second;
  }
  Graph out;
  for (const Triple& t : all) out.insert(t);
  return out;
}

// ---------------------------------------------------------------------------
// Nested-loop BGP join in pattern order. Each pattern loops over every stored
// triple that agrees with its constants; variables are checked as they bind.
// Returns rows over `vars` (all WHERE variables), as a sorted multiset.

using OracleRow = std::vector<std::optional<Term>>;

inline std::vector<OracleRow> nested_loop(const std::vector<TriplePattern>& where, const Graph& g,
                                          const std::vector<std::string>& vars) {
  using Spo = std::array<Term, 3>;
  std::vector<Spo> triples;
  for (const Triple& t : g) triples.push_back({Term(t.subject), Term(t.predicate), t.object});

  // Per pattern: position -> constant or variable slot.
  struct Pos {
    const Term* constant = nullptr;
    size_t slot = 0;
  };
  std::vector<std::string> names = vars;
  auto slot_of = [&](const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it != names.end()) return static_cast<size_t>(it - names.begin());
    names.push_back(n);
    return names.size() - 1;
  };
  std::vector<std::array<Pos, 3>> shape;
  std::vector<std::vector<const Spo*>> candidates;
  for (const TriplePattern& p : where) {
    std::array<Pos, 3> pos;
    const PatternTerm* parts[3] = {&p.subject, &p.predicate, &p.object};
    for (int k = 0; k < 3; ++k) {
      if (auto* c = std::get_if<Term>(parts[k])) {
        pos[k].constant = c;
      } else {
        pos[k].slot = slot_of(std::get<Variable>(*parts[k]).name);
      }
    }
    std::vector<const Spo*> matching;
    for (const Spo& t : triples) {
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) ok = !pos[k].constant || *pos[k].constant == t[k];
      if (ok) matching.push_back(&t);
    }
    shape.push_back(pos);
    candidates.push_back(std::move(matching));
  }

  std::vector<OracleRow> out;
  std::vector<const Term*> binding(names.size(), nullptr);
  std::function<void(size_t)> step = [&](size_t i) {
    if (i == where.size()) {
      OracleRow row;
      for (size_t v = 0; v < vars.size(); ++v) {
        row.push_back(binding[v] ? std::optional<Term>(*binding[v]) : std::nullopt);
      }
      out.push_back(std::move(row));
      return;
    }
    for (const Spo* t : candidates[i]) {
      size_t bound_here[3];
      size_t n_bound = 0;
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        const Pos& pos = shape[i][k];
        if (pos.constant) continue;
        const Term*& cell = binding[pos.slot];
        if (cell) {
          ok = *cell == (*t)[k];
        } else {
          cell = &(*t)[k];
          bound_here[n_bound++] = pos.slot;
        }
      }
      if (ok) step(i + 1);
      for (size_t b = 0; b < n_bound; ++b) binding[bound_here[b]] = nullptr;
    }
  };
  step(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Rows of an engine result reordered to `vars`, sorted.
inline std::vector<OracleRow> reorder(const BindingsTable& t, const std::vector<std::string>& vars) {
  std::vector<size_t> idx;
  for (const auto& v : vars) {
    idx.push_back(static_cast<size_t>(std::find(t.columns.begin(), t.columns.end(), v) - t.columns.begin()));
  }
  std::vector<OracleRow> out;
  for (const auto& r : t.rows) {
    OracleRow row;
    for (size_t i : idx) row.push_back(i < r.size() ? r[i] : std::nullopt);
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Random data over a vocabulary that exercises subproperties, inverses, the
// symmetric property, class hierarchy and literals.

struct RandomVocab {
  std::vector<Iri> nodes;
  std::vector<Iri> properties;
  std::vector<Iri> classes;
};

inline RandomVocab random_vocab(size_t n_nodes) {
  RandomVocab v;
  for (size_t i = 0; i < n_nodes; ++i) v.nodes.push_back(Iri("http://example.org/n" + std::to_string(i)));
  for (const char* p : {"P9_consists_of", "P9i_forms_part_of", "P14_carried_out_by", "P14i_performed",
                        "P11_had_participant", "P74_has_current_or_former_residence", "P43_has_dimension"}) {
    v.properties.push_back(crm(p));
  }
  for (const char* p : {"consists_of_leaving", "consists_of_arrival", "leaving_is_part_of", "voyages",
                        "voyage_of", "navigated_by_captain", "related_to", "has_tonnage", "works_at",
                        "has_first_name", "has_current_age"}) {
    v.properties.push_back(sealit(p));
  }
  v.properties.push_back(Iri("http://example.org/unrelated"));
  for (const char* c : {"Voyage", "Ship", "Arrival", "Leaving", "Crew_Payment", "Tonnage"}) {
    v.classes.push_back(sealit(c));
  }
  for (const char* c : {"E21_Person", "E7_Activity", "E53_Place", "E39_Actor"}) v.classes.push_back(crm(c));
  return v;
}

inline Graph random_graph(std::mt19937& rng, const RandomVocab& v, size_t n_triples) {
  Graph g;
  auto pick = [&](const auto& xs) -> const auto& {
    return xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)];
  };
  std::uniform_int_distribution<int> kind(0, 9);
  while (g.size() < n_triples) {
    const Iri& s = pick(v.nodes);
    int k = kind(rng);
    if (k == 0) {
      g.insert(s, vocab::rdf_type(), pick(v.classes));
    } else if (k == 1) {
      g.insert(s, vocab::rdfs_label(), Literal("label " + std::to_string(rng() % 50)));
    } else {
      const Iri& p = pick(v.properties);
      if (p.local_name() == "has_first_name" || p.local_name() == "has_current_age") {
        g.insert(s, p, Literal(std::to_string(rng() % 20), vocab::xsd_integer()));
      } else {
        g.insert(s, p, pick(v.nodes));
      }
    }
  }
  return g;
}

// A connected BGP grown from a walk over stored triples, with nodes replaced
// by variables (consistently) and sometimes a variable predicate.
inline std::vector<TriplePattern> random_bgp(std::mt19937& rng, const Graph& g, size_t n_patterns) {
  std::vector<Triple> triples(g.begin(), g.end());
  std::map<Term, std::string> var_of;
  std::set<Term> kept;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto term_for = [&](const Term& t) -> PatternTerm {
    if (kept.count(t)) return t;
    auto it = var_of.find(t);
    if (it != var_of.end()) return Variable{it->second};
    if (coin(rng) < 0.25) {
      kept.insert(t);
      return t;
    }
    std::string name = "v" + std::to_string(var_of.size());
    var_of.emplace(t, name);
    return Variable{name};
  };
  std::vector<TriplePattern> out;
  std::vector<Term> frontier;
  for (size_t i = 0; i < n_patterns; ++i) {
    std::vector<const Triple*> candidates;
    if (!frontier.empty()) {
      Term anchor = frontier[rng() % frontier.size()];
      for (const Triple& t : triples) {
        if (Term(t.subject) == anchor || t.object == anchor) candidates.push_back(&t);
      }
    }
    if (candidates.empty()) candidates.push_back(&triples[rng() % triples.size()]);
    const Triple& t = *candidates[rng() % candidates.size()];
    PatternTerm pred = Term(t.predicate);
    if (coin(rng) < 0.12) {
      // Shared predicate variables are rare and expensive; give each its own.
      pred = Variable{"p" + std::to_string(i)};
    }
    out.push_back(TriplePattern{term_for(Term(t.subject)), pred, term_for(t.object)});
    frontier.push_back(Term(t.subject));
    if (t.object.is_iri()) frontier.push_back(t.object);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline QueryAst select_all(std::vector<TriplePattern> where) {
  QueryAst ast;
  ast.select_all = true;
  ast.where = std::move(where);
  return ast;
}

// ---------------------------------------------------------------------------
// Structural equality of two queries up to a bijective renaming of variables.

inline bool isomorphic(const QueryAst& a, const QueryAst& b) {
  if (a.distinct != b.distinct || a.select_all != b.select_all || a.where.size() != b.where.size() ||
      a.projection.size() != b.projection.size() || a.group_by.size() != b.group_by.size() ||
      a.order_by.size() != b.order_by.size() || a.limit != b.limit || a.count.has_value() != b.count.has_value()) {
    return false;
  }
  if (a.count && (a.count->distinct != b.count->distinct ||
                  a.count->variable.has_value() != b.count->variable.has_value())) {
    return false;
  }
  std::map<std::string, std::string> fwd, back;
  auto bind = [&](const std::string& x, const std::string& y) {
    auto f = fwd.find(x);
    auto r = back.find(y);
    if (f != fwd.end() || r != back.end()) return f != fwd.end() && r != back.end() && f->second == y;
    fwd[x] = y;
    back[y] = x;
    return true;
  };
  // Search over pattern matchings, extending the renaming as we go.
  std::vector<bool> used(b.where.size(), false);
  std::function<bool(size_t)> match = [&](size_t i) -> bool {
    if (i == a.where.size()) {
      if (a.count && a.count->variable && !bind(*a.count->variable, *b.count->variable)) return false;
      if (a.count && !bind(a.count->alias, b.count->alias)) return false;
      for (size_t k = 0; k < a.projection.size(); ++k) {
        if (!bind(a.projection[k], b.projection[k])) return false;
      }
      for (size_t k = 0; k < a.group_by.size(); ++k) {
        if (!bind(a.group_by[k], b.group_by[k])) return false;
      }
      for (size_t k = 0; k < a.order_by.size(); ++k) {
        if (a.order_by[k].descending != b.order_by[k].descending) return false;
        if (!bind(a.order_by[k].variable, b.order_by[k].variable)) return false;
      }
      return true;
    }
    for (size_t j = 0; j < b.where.size(); ++j) {
      if (used[j]) continue;
      auto saved_f = fwd;
      auto saved_b = back;
      bool ok = true;
      auto same = [&](const PatternTerm& x, const PatternTerm& y) {
        if (!ok) return;
        auto* vx = std::get_if<Variable>(&x);
        auto* vy = std::get_if<Variable>(&y);
        if (vx && vy) {
          ok = bind(vx->name, vy->name);
        } else {
          ok = !vx && !vy && std::get<Term>(x) == std::get<Term>(y);
        }
      };
      same(a.where[i].subject, b.where[j].subject);
      same(a.where[i].predicate, b.where[j].predicate);
      same(a.where[i].object, b.where[j].object);
      if (ok) {
        used[j] = true;
        if (match(i + 1)) return true;
        used[j] = false;
      }
      fwd = saved_f;
      back = saved_b;
    }
    return false;
  };
  return match(0);
}

}  // namespace mariner::testing
