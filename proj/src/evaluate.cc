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
#include <deque>
#include <set>

#include "json.hpp"
#include "mariner/error.h"
#include "mariner/query.h"

namespace mariner {

namespace {

// A (property, orientation) pair: `reversed` means the stored triple's
// subject and object trade places in the entailed triple.
struct Oriented {
  Iri property;
  bool reversed;
  auto operator<=>(const Oriented&) const = default;
};

// Pairs whose stored triples entail triples of `start` (walking down), or
// that stored triples of `start` entail (walking up).
std::vector<Oriented> orientation_closure(const OntologySchema& schema, const Iri& start, bool upward) {
  std::set<Oriented> seen{{start, false}};
  std::deque<Oriented> queue{{start, false}};
  while (!queue.empty()) {
    Oriented cur = queue.front();
    queue.pop_front();
    if (!schema.has_property(cur.property)) continue;
    const PropertyDef& def = schema.property(cur.property);
    auto push = [&](Oriented next) {
      if (seen.insert(next).second) queue.push_back(next);
    };
    if (upward) {
      for (const Iri& sup : def.direct_superproperties) push({sup, cur.reversed});
    } else {
      for (const Iri& sub : schema.direct_subproperties(cur.property)) push({sub, cur.reversed});
    }
    if (def.inverse) push({*def.inverse, !cur.reversed});
    if (def.symmetric) push({cur.property, !cur.reversed});
  }
  return {seen.begin(), seen.end()};
}

TriplePattern oriented_pattern(const TriplePattern& p, const Iri& property, bool reversed) {
  if (reversed) return TriplePattern{p.object, Term(property), p.subject};
  return TriplePattern{p.subject, Term(property), p.object};
}

const Term* as_term(const PatternTerm& t) { return std::get_if<Term>(&t); }

}  // namespace

std::vector<RewrittenPattern> rewrite(const QueryAst& ast, const OntologySchema& schema, EntailmentMode mode) {
  std::vector<RewrittenPattern> out;
  for (const TriplePattern& p : ast.where) {
    RewrittenPattern r{p, {}, false};
    const Term* pred = as_term(p.predicate);
    if (mode == EntailmentMode::kNone) {
      r.alternatives.push_back({p, false});
    } else if (!pred) {
      r.alternatives.push_back({p, false});
      r.widen_matches = true;
    } else if (pred->is_iri() && pred->iri() == vocab::rdf_type()) {
      const Term* cls = as_term(p.object);
      if (!cls) {
        r.alternatives.push_back({p, false});
        r.widen_matches = true;
      } else {
        r.alternatives.push_back({p, false});
        if (cls->is_iri() && schema.has_class(cls->iri())) {
          for (const Iri& sub : schema.subclasses(cls->iri())) {
            r.alternatives.push_back({TriplePattern{p.subject, p.predicate, Term(sub)}, false});
          }
        }
      }
    } else if (pred->is_iri() && schema.has_property(pred->iri())) {
      for (const Oriented& o : orientation_closure(schema, pred->iri(), /*upward=*/false)) {
        r.alternatives.push_back({oriented_pattern(p, o.property, o.reversed), o.reversed});
      }
      // The unreversed original first; the rest in closure order.
      std::stable_partition(r.alternatives.begin(), r.alternatives.end(), [&](const PatternAlternative& a) {
        return !a.reversed && a.stored.predicate == p.predicate;
      });
    } else {
      r.alternatives.push_back({p, false});
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

int compare_for_order(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (!a || !b) return a ? 1 : (b ? -1 : 0);
  auto integer = [](const Term& t) -> std::optional<std::pair<bool, std::string_view>> {
    if (!t.is_literal() || t.literal().datatype() != vocab::xsd_integer()) return std::nullopt;
    std::string_view s = t.literal().lexical();
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
      negative = s[0] == '-';
      s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return std::nullopt;
    }
    while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
    if (s == "0") negative = false;
    return std::make_pair(negative, s);
  };
  auto ia = integer(*a), ib = integer(*b);
  if (ia && ib) {
    if (ia->first != ib->first) return ia->first ? -1 : 1;
    int magnitude;
    if (ia->second.size() != ib->second.size()) {
      magnitude = ia->second.size() < ib->second.size() ? -1 : 1;
    } else {
      int c = ia->second.compare(ib->second);
      magnitude = c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    return ia->first ? -magnitude : magnitude;
  }
  int c = a->lexical().compare(b->lexical());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

using Row = std::vector<std::optional<Term>>;

class Evaluator {
 public:
  Evaluator(const QueryAst& ast, const Graph& graph, const OntologySchema& schema, EntailmentMode mode)
      : ast_(ast), graph_(graph), schema_(schema), patterns_(rewrite(ast, schema, mode)) {
    vars_ = ast.where_variables();
  }

  BindingsTable run() {
    Row binding(vars_.size());
    std::vector<bool> done(patterns_.size(), false);
    solve(done, patterns_.size(), binding);
    return finish();
  }

 private:
  int slot(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
  }

  // The value at a pattern position under `binding`, or nullptr if free.
  const Term* value(const PatternTerm& t, const Row& binding) const {
    if (const Term* c = as_term(t)) return c;
    int s = slot(std::get<Variable>(t).name);
    return binding[s] ? &*binding[s] : nullptr;
  }

  int bound_positions(const TriplePattern& p, const Row& binding) const {
    return (value(p.subject, binding) ? 1 : 0) + (value(p.predicate, binding) ? 1 : 0) +
           (value(p.object, binding) ? 1 : 0);
  }

  // Binds `t` to position `pt`; false on conflict. Newly bound slots are
  // appended to `fresh` so the caller can undo them.
  bool unify(const PatternTerm& pt, const Term& t, Row& binding, std::vector<int>& fresh) const {
    if (const Term* c = as_term(pt)) return *c == t;
    int s = slot(std::get<Variable>(pt).name);
    auto& cell = binding[s];
    if (cell) return *cell == t;
    cell = t;
    fresh.push_back(s);
    return true;
  }

  // Entailed triples matching `p` under `binding`, without duplicates.
  std::vector<Triple> lookup(const RewrittenPattern& rp, const Row& binding) {
    std::vector<Triple> found;
    const Term* s = value(rp.pattern.subject, binding);
    const Term* p = value(rp.pattern.predicate, binding);
    const Term* o = value(rp.pattern.object, binding);
    if ((s && !s->is_iri()) || (p && !p->is_iri())) return found;
    auto accept = [&](const Triple& t) {
      if (s && Term(t.subject) != *s) return;
      if (p && t.predicate != p->iri()) return;
      if (o && t.object != *o) return;
      found.push_back(t);
    };

    if (!rp.widen_matches) {
      for (const PatternAlternative& alt : rp.alternatives) {
        const Term* ss = value(alt.stored.subject, binding);
        const Term* sp = value(alt.stored.predicate, binding);
        const Term* so = value(alt.stored.object, binding);
        if ((ss && !ss->is_iri()) || (sp && !sp->is_iri())) continue;
        // The entailed triple keeps the pattern's own constants; only the
        // free positions come from the stored triple.
        const Term* cp = as_term(rp.pattern.predicate);
        const Term* co = as_term(rp.pattern.object);
        graph_.for_each_match(ss ? &ss->iri() : nullptr, sp ? &sp->iri() : nullptr, so,
                              [&](const Triple& t) {
                                if (alt.reversed && !t.object.is_iri()) return true;
                                Iri subj = alt.reversed ? t.object.iri() : t.subject;
                                Term obj = alt.reversed ? Term(t.subject) : t.object;
                                accept(Triple{std::move(subj), cp ? cp->iri() : t.predicate, co ? *co : obj});
                                return true;
                              });
      }
    } else {
      // Candidate stored triples: those touching a bound subject or object
      // at either end, since widening may reverse them.
      auto widen = [&](const Triple& t) {
        if (t.predicate == vocab::rdf_type()) {
          accept(t);
          if (t.object.is_iri() && schema_.has_class(t.object.iri())) {
            for (const Iri& sup : schema_.superclasses(t.object.iri())) {
              accept(Triple{t.subject, t.predicate, Term(sup)});
            }
          }
          return true;
        }
        for (const Oriented& up : upward(t.predicate)) {
          if (!up.reversed) {
            accept(Triple{t.subject, up.property, t.object});
          } else if (t.object.is_iri()) {
            accept(Triple{t.object.iri(), up.property, Term(t.subject)});
          }
        }
        return true;
      };
      if (p && p->iri() == vocab::rdf_type() && o) {
        // x a C holds iff x has a stored type among C and its subclasses
        const Iri* subj = s ? &s->iri() : nullptr;
        auto typed_as = [&](const Term& cls) {
          graph_.for_each_match(subj, &vocab::rdf_type(), &cls, [&](const Triple& t) {
            found.push_back(Triple{t.subject, t.predicate, *o});
            return true;
          });
        };
        typed_as(*o);
        if (o->is_iri() && schema_.has_class(o->iri())) {
          for (const Iri& sub : schema_.subclasses(o->iri())) typed_as(Term(sub));
        }
      } else if (p && p->iri() == vocab::rdf_type()) {
        graph_.for_each_match(s ? &s->iri() : nullptr, &vocab::rdf_type(), nullptr, widen);
      } else if (s) {
        graph_.for_each_match(&s->iri(), nullptr, nullptr, widen);
        graph_.for_each_match(nullptr, nullptr, s, widen);
      } else if (o) {
        graph_.for_each_match(nullptr, nullptr, o, widen);
        if (o->is_iri()) graph_.for_each_match(&o->iri(), nullptr, nullptr, widen);
        // x a Sub entails x a o
        if (o->is_iri() && schema_.has_class(o->iri()) && (!p || p->iri() == vocab::rdf_type())) {
          for (const Iri& sub : schema_.subclasses(o->iri())) {
            Term cls(sub);
            graph_.for_each_match(nullptr, &vocab::rdf_type(), &cls, widen);
          }
        }
      } else {
        graph_.for_each_match(nullptr, nullptr, nullptr, widen);
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
  }

  const std::vector<Oriented>& upward(const Iri& property) {
    auto it = upward_.find(property);
    if (it == upward_.end()) {
      it = upward_.emplace(property, orientation_closure(schema_, property, /*upward=*/true)).first;
    }
    return it->second;
  }

  void solve(std::vector<bool>& done, size_t remaining, Row& binding) {
    if (remaining == 0) {
      solutions_.push_back(binding);
      return;
    }
    // Most-bound pattern next; ties keep textual order.
    size_t best = patterns_.size();
    int best_bound = -1;
    for (size_t i = 0; i < patterns_.size(); ++i) {
      if (done[i]) continue;
      int b = bound_positions(patterns_[i].pattern, binding);
      if (b > best_bound) {
        best = i;
        best_bound = b;
      }
    }
    const RewrittenPattern& rp = patterns_[best];
    done[best] = true;
    std::vector<int> fresh;
    for (const Triple& t : lookup(rp, binding)) {
      fresh.clear();
      if (unify(rp.pattern.subject, Term(t.subject), binding, fresh) &&
          unify(rp.pattern.predicate, Term(t.predicate), binding, fresh) &&
          unify(rp.pattern.object, t.object, binding, fresh)) {
        solve(done, remaining - 1, binding);
      }
      for (int s : fresh) binding[s].reset();
    }
    done[best] = false;
  }

  BindingsTable finish() {
    std::vector<std::string> columns;
    std::vector<Row> rows;
    if (ast_.grouped()) {
      group(columns, rows);
    } else {
      columns = vars_;
      rows = std::move(solutions_);
    }

    auto index_of = [&](const std::string& name) {
      auto it = std::find(columns.begin(), columns.end(), name);
      return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
    };
    std::vector<std::pair<int, bool>> keys;
    for (const auto& k : ast_.order_by) keys.emplace_back(index_of(k.variable), k.descending);
    std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
      for (auto [idx, desc] : keys) {
        if (idx < 0) continue;
        int c = compare_for_order(a[idx], b[idx]);
        if (c != 0) return desc ? c > 0 : c < 0;
      }
      return a < b;
    });

    BindingsTable table;
    table.columns = ast_.select_all ? vars_ : ast_.projection;
    std::vector<int> picks;
    for (const auto& c : table.columns) picks.push_back(index_of(c));
    bool identity = !ast_.distinct && table.columns == columns;
    if (identity) {
      if (ast_.limit && rows.size() > *ast_.limit) rows.resize(*ast_.limit);
      table.rows = std::move(rows);
      return table;
    }
    std::set<Row> seen;
    for (const Row& r : rows) {
      if (ast_.limit && table.rows.size() >= *ast_.limit) break;
      Row out;
      out.reserve(picks.size());
      for (int idx : picks) out.push_back(idx < 0 ? std::nullopt : r[idx]);
      if (ast_.distinct && !seen.insert(out).second) continue;
      table.rows.push_back(std::move(out));
    }
    return table;
  }

  void group(std::vector<std::string>& columns, std::vector<Row>& rows) {
    struct Acc {
      size_t count = 0;
      std::set<std::optional<Term>> values;
      std::set<Row> rows;
    };
    std::vector<int> key_slots;
    for (const auto& g : ast_.group_by) key_slots.push_back(slot(g));
    int count_slot = ast_.count && ast_.count->variable ? slot(*ast_.count->variable) : -1;

    std::map<Row, Acc> groups;
    if (ast_.group_by.empty()) groups[Row{}];
    for (const Row& s : solutions_) {
      Row key;
      for (int k : key_slots) key.push_back(k < 0 ? std::nullopt : s[k]);
      Acc& acc = groups[key];
      if (!ast_.count) continue;
      if (ast_.count->variable) {
        if (count_slot < 0 || !s[count_slot]) continue;
        if (ast_.count->distinct) {
          acc.values.insert(s[count_slot]);
        } else {
          ++acc.count;
        }
      } else if (ast_.count->distinct) {
        acc.rows.insert(s);
      } else {
        ++acc.count;
      }
    }

    columns = ast_.group_by;
    if (ast_.count) columns.push_back(ast_.count->alias);
    for (auto& [key, acc] : groups) {
      Row r = key;
      if (ast_.count) {
        size_t n = acc.count;
        if (ast_.count->distinct) n = ast_.count->variable ? acc.values.size() : acc.rows.size();
        r.push_back(Term(Literal(std::to_string(n), vocab::xsd_integer())));
      }
      rows.push_back(std::move(r));
    }
  }

  const QueryAst& ast_;
  const Graph& graph_;
  const OntologySchema& schema_;
  std::vector<RewrittenPattern> patterns_;
  std::vector<std::string> vars_;
  std::vector<Row> solutions_;
  std::map<Iri, std::vector<Oriented>> upward_;
};

}  // namespace

BindingsTable evaluate(const QueryAst& ast, const Graph& graph, const OntologySchema& schema,
                       EntailmentMode mode) {
  return Evaluator(ast, graph, schema, mode).run();
}

// ---------------------------------------------------------------------------

namespace {

std::string csv_field(std::string_view s) {
  bool quote = s.find_first_of(",\"\r\n") != std::string_view::npos ||
               (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!quote) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const BindingsTable& table) {
  std::string out;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += csv_field(row[i]->lexical());
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const BindingsTable& table) {
  nlohmann::ordered_json doc;
  doc["head"]["vars"] = table.columns;
  auto bindings = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      if (!row[i]) continue;
      nlohmann::ordered_json cell;
      if (row[i]->is_iri()) {
        cell["type"] = "uri";
        cell["value"] = row[i]->iri().str();
      } else {
        const Literal& lit = row[i]->literal();
        cell["type"] = "literal";
        cell["value"] = lit.lexical();
        if (lit.datatype()) cell["datatype"] = lit.datatype()->str();
        if (lit.language()) cell["xml:lang"] = *lit.language();
      }
      b[table.columns[i]] = std::move(cell);
    }
    bindings.push_back(std::move(b));
  }
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump(2) + "\n";
}

}  // namespace mariner
