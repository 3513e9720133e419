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

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mariner/term.h"

namespace mariner {

namespace detail {

// Orders triples by (predicate, object, subject). Transparent so that a
// partially bound probe can select a contiguous range.
struct PosProbe {
  const Iri* predicate = nullptr;
  const Term* object = nullptr;
};
struct OspProbe {
  const Term* object = nullptr;
  const Iri* subject = nullptr;
};
struct SpoProbe {
  const Iri* subject = nullptr;
  const Iri* predicate = nullptr;
};

struct SpoLess {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const { return a < b; }
  bool operator()(const Triple& a, const SpoProbe& b) const;
  bool operator()(const SpoProbe& a, const Triple& b) const;
};
struct PosLess {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const;
  bool operator()(const Triple& a, const PosProbe& b) const;
  bool operator()(const PosProbe& a, const Triple& b) const;
};
struct OspLess {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const;
  bool operator()(const Triple& a, const OspProbe& b) const;
  bool operator()(const OspProbe& a, const Triple& b) const;
};

}  // namespace detail

// In-memory triple store with SPO, POS and OSP indexes. Iteration is
// lexicographic by (subject, predicate, object).
//
// Writes are single-threaded. A const Graph may be read concurrently; the
// service layer shares one through Snapshot.
class Graph {
 public:
  // Registers the default prefixes: sealit, crm, rdf, rdfs, xsd, owl.
  Graph();

  // Returns true iff the triple was not already present.
  bool insert(const Triple& t);
  bool insert(const Term& s, const Term& p, const Term& o) { return insert(Triple::make(s, p, o)); }
  // Unions another graph's triples and prefixes into this one.
  void insert_all(const Graph& other);

  bool contains(const Triple& t) const { return spo_.count(t) > 0; }
  size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  // Triples matching all bound positions, in index order.
  std::vector<Triple> match(const std::optional<Iri>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;

  // Streaming form of match; `fn` returns false to stop early.
  template <typename Fn>
  void for_each_match(const Iri* s, const Iri* p, const Term* o, Fn&& fn) const;

  std::set<Triple>::const_iterator begin() const { return spo_.begin(); }
  std::set<Triple>::const_iterator end() const { return spo_.end(); }

  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }
  void set_prefix(const std::string& prefix, const std::string& ns);

  // Expands "prefix:local" or "<absolute-iri>". Throws kUnknownPrefix.
  Iri resolve(std::string_view curie) const;

  // Exposed for invariant checks.
  size_t spo_size() const { return spo_.size(); }
  size_t pos_size() const { return pos_.size(); }
  size_t osp_size() const { return osp_.size(); }

 private:
  std::set<Triple, detail::SpoLess> spo_;
  std::set<Triple, detail::PosLess> pos_;
  std::set<Triple, detail::OspLess> osp_;
  std::map<std::string, std::string> prefixes_;
};

using Snapshot = std::shared_ptr<const Graph>;

// Expands a CURIE against a prefix table. Shared by the Turtle, query and
// mapping parsers.
std::optional<Iri> expand_curie(const std::map<std::string, std::string>& prefixes,
                                std::string_view curie);

const std::map<std::string, std::string>& default_prefixes();

template <typename Fn>
void Graph::for_each_match(const Iri* s, const Iri* p, const Term* o, Fn&& fn) const {
  auto run = [&](auto first, auto last) {
    for (auto it = first; it != last; ++it) {
      if (s && it->subject != *s) continue;
      if (p && it->predicate != *p) continue;
      if (o && it->object != *o) continue;
      if (!fn(*it)) return;
    }
  };
  if (s && p) {
    auto [lo, hi] = spo_.equal_range(detail::SpoProbe{s, p});
    run(lo, hi);
  } else if (s && o) {
    auto [lo, hi] = osp_.equal_range(detail::OspProbe{o, s});
    run(lo, hi);
  } else if (s) {
    auto [lo, hi] = spo_.equal_range(detail::SpoProbe{s, nullptr});
    run(lo, hi);
  } else if (p) {
    auto [lo, hi] = pos_.equal_range(detail::PosProbe{p, o});
    run(lo, hi);
  } else if (o) {
    auto [lo, hi] = osp_.equal_range(detail::OspProbe{o, nullptr});
    run(lo, hi);
  } else {
    run(spo_.begin(), spo_.end());
  }
}

}  // namespace mariner
