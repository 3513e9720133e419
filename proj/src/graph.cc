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

#include "mariner/graph.h"

#include <tuple>

#include "mariner/error.h"

namespace mariner {
namespace detail {

namespace {

// Compares a triple against a probe on the probe's bound prefix only. A null
// component ends the prefix, so everything sharing the prefix is equivalent.
template <typename A, typename B>
int cmp_prefix(const A* a, const B* b) {
  if (*a < *b) return -1;
  if (*b < *a) return 1;
  return 0;
}

}  // namespace

bool SpoLess::operator()(const Triple& a, const SpoProbe& b) const {
  if (!b.subject) return false;
  int c = cmp_prefix(&a.subject, b.subject);
  if (c != 0 || !b.predicate) return c < 0;
  return a.predicate < *b.predicate;
}
bool SpoLess::operator()(const SpoProbe& a, const Triple& b) const {
  if (!a.subject) return false;
  int c = cmp_prefix(a.subject, &b.subject);
  if (c != 0 || !a.predicate) return c < 0;
  return *a.predicate < b.predicate;
}

bool PosLess::operator()(const Triple& a, const Triple& b) const {
  return std::tie(a.predicate, a.object, a.subject) < std::tie(b.predicate, b.object, b.subject);
}
bool PosLess::operator()(const Triple& a, const PosProbe& b) const {
  if (!b.predicate) return false;
  int c = cmp_prefix(&a.predicate, b.predicate);
  if (c != 0 || !b.object) return c < 0;
  return a.object < *b.object;
}
bool PosLess::operator()(const PosProbe& a, const Triple& b) const {
  if (!a.predicate) return false;
  int c = cmp_prefix(a.predicate, &b.predicate);
  if (c != 0 || !a.object) return c < 0;
  return *a.object < b.object;
}

bool OspLess::operator()(const Triple& a, const Triple& b) const {
  return std::tie(a.object, a.subject, a.predicate) < std::tie(b.object, b.subject, b.predicate);
}
bool OspLess::operator()(const Triple& a, const OspProbe& b) const {
  if (!b.object) return false;
  int c = cmp_prefix(&a.object, b.object);
  if (c != 0 || !b.subject) return c < 0;
  return a.subject < *b.subject;
}
bool OspLess::operator()(const OspProbe& a, const Triple& b) const {
  if (!a.object) return false;
  int c = cmp_prefix(a.object, &b.object);
  if (c != 0 || !a.subject) return c < 0;
  return *a.subject < b.subject;
}

}  // namespace detail

const std::map<std::string, std::string>& default_prefixes() {
  static const std::map<std::string, std::string> table = {
      {"crm", std::string(vocab::kCrm)},   {"owl", std::string(vocab::kOwl)},
      {"rdf", std::string(vocab::kRdf)},   {"rdfs", std::string(vocab::kRdfs)},
      {"sealit", std::string(vocab::kSealit)}, {"xsd", std::string(vocab::kXsd)},
  };
  return table;
}

Graph::Graph() : prefixes_(default_prefixes()) {}

bool Graph::insert(const Triple& t) {
  if (!spo_.insert(t).second) return false;
  pos_.insert(t);
  osp_.insert(t);
  return true;
}

void Graph::insert_all(const Graph& other) {
  for (const auto& [prefix, ns] : other.prefixes_) prefixes_.emplace(prefix, ns);
  for (const Triple& t : other) insert(t);
}

std::vector<Triple> Graph::match(const std::optional<Iri>& s, const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  for_each_match(s ? &*s : nullptr, p ? &*p : nullptr, o ? &*o : nullptr,
                 [&](const Triple& t) {
                   out.push_back(t);
                   return true;
                 });
  return out;
}

void Graph::set_prefix(const std::string& prefix, const std::string& ns) {
  prefixes_[prefix] = ns;
}

std::optional<Iri> expand_curie(const std::map<std::string, std::string>& prefixes,
                                std::string_view curie) {
  if (curie.size() >= 2 && curie.front() == '<' && curie.back() == '>') {
    std::string_view body = curie.substr(1, curie.size() - 2);
    if (!Iri::is_valid(body)) return std::nullopt;
    return Iri(std::string(body));
  }
  auto colon = curie.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto it = prefixes.find(std::string(curie.substr(0, colon)));
  if (it == prefixes.end()) return std::nullopt;
  std::string full = it->second + std::string(curie.substr(colon + 1));
  if (!Iri::is_valid(full)) return std::nullopt;
  return Iri(std::move(full));
}

Iri Graph::resolve(std::string_view curie) const {
  if (auto iri = expand_curie(prefixes_, curie)) return *iri;
  if (curie.size() >= 2 && curie.front() == '<') {
    throw Error(ErrorCode::kInvalidIri, "invalid IRI: " + std::string(curie));
  }
  throw Error(ErrorCode::kUnknownPrefix, "unknown prefix in '" + std::string(curie) + "'");
}

}  // namespace mariner
