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
#include <random>

#include "doctest.h"
#include "mariner/error.h"
#include "mariner/graph.h"
#include "test_support.h"

using namespace mariner;
using namespace mariner::testing;

TEST_CASE("iri validation") {
  CHECK(Iri::is_valid("http://a/b"));
  CHECK(Iri::is_valid("urn:x"));
  CHECK_FALSE(Iri::is_valid(""));
  CHECK_FALSE(Iri::is_valid("no-scheme"));
  CHECK_FALSE(Iri::is_valid("http://a b"));
  CHECK_THROWS_AS(Iri("relative/path"), Error);
  CHECK(Iri("http://x.org/a#b").local_name() == "b");
}

TEST_CASE("literal datatype and language are exclusive") {
  Literal l = Literal::with_language("nave", "IT");
  CHECK(l.language() == std::optional<std::string>("it"));
  CHECK_FALSE(l.datatype().has_value());
  Literal typed("3", vocab::xsd_integer());
  CHECK_FALSE(typed.language().has_value());
  CHECK_THROWS_AS(Literal::with_language("x", "not a tag"), Error);
}

TEST_CASE("triples reject literals as subject or predicate") {
  CHECK_THROWS_AS(Triple::make(Literal("s"), vocab::rdfs_label(), Literal("o")), Error);
  CHECK_THROWS_AS(Triple::make(Iri("http://s"), Literal("p"), Literal("o")), Error);
}

TEST_CASE("insert base cases") {
  Graph g;
  Triple t{Iri("http://s"), Iri("http://p"), Term(Iri("http://o"))};
  CHECK(g.insert(t));
  CHECK(g.size() == 1);
  CHECK_FALSE(g.insert(t));
  CHECK(g.size() == 1);
}

TEST_CASE("insert replay of a reification pattern") {
  // works-at reification plus its label: hand-built list of six triples.
  Iri node = kb("PC_works_at/Andrea_Ferro");
  Iri person = kb("person/Andrea_Ferro");
  Iri group = kb("legal_body/La_Ligure");
  std::vector<Triple> ts = {
      {node, vocab::rdf_type(), Term(sealit("PC_works_at"))},
      {node, vocab::p01_has_domain(), Term(person)},
      {node, vocab::p02_has_range(), Term(group)},
      {node, sealit("in_the_role_of"), Term(kb("profession/mechanic"))},
      {person, sealit("works_at"), Term(group)},
      {node, vocab::rdfs_label(), Term(Literal("Andrea Ferro La Ligure"))},
  };
  Graph g;
  for (const auto& t : ts) CHECK(g.insert(t));
  for (const auto& t : ts) CHECK_FALSE(g.insert(t));
  CHECK(g.size() == 6);
}

TEST_CASE("match on the empty graph") {
  Graph g;
  CHECK(g.match(std::nullopt, std::nullopt, std::nullopt).empty());
}

TEST_CASE("match subject and predicate on fixture") {
  Graph g = fixture_kb();
  Iri ship = kb("ship/Aurora");
  auto got = g.match(ship, sealit("voyages"), std::nullopt);
  CHECK(got == scan(g, ship, sealit("voyages"), std::nullopt));
  CHECK(got.size() == 1);
}

TEST_CASE("match equals linear scan for every pattern shape") {
  std::mt19937 rng(7);
  for (size_t n : {0u, 1u, 50u, 1000u, 10000u}) {
    RandomVocab v = random_vocab(n < 100 ? 10 : 300);
    Graph g = random_graph(rng, v, n);
    std::vector<Triple> all(g.begin(), g.end());
    int probes = n >= 10000 ? 40 : 200;
    for (int i = 0; i < probes; ++i) {
      Triple seed = all.empty() ? Triple{v.nodes[0], v.properties[0], Term(v.nodes[1])} : all[rng() % all.size()];
      // Half the probes use fresh terms that may not occur at all.
      if (rng() % 2) seed.subject = v.nodes[rng() % v.nodes.size()];
      for (int mask = 0; mask < 8; ++mask) {
        std::optional<Iri> s, p;
        std::optional<Term> o;
        if (mask & 1) s = seed.subject;
        if (mask & 2) p = seed.predicate;
        if (mask & 4) o = seed.object;
        auto got = g.match(s, p, o);
        auto want = scan(g, s, p, o);
        std::sort(got.begin(), got.end());
        REQUIRE(got == want);
      }
    }
    CHECK(g.spo_size() == g.pos_size());
    CHECK(g.spo_size() == g.osp_size());
  }
}

TEST_CASE("contents are insensitive to insertion order") {
  std::mt19937 rng(11);
  RandomVocab v = random_vocab(40);
  Graph a = random_graph(rng, v, 600);
  std::vector<Triple> ts(a.begin(), a.end());
  // Duplicates interleaved with a shuffle.
  std::vector<Triple> replay = ts;
  replay.insert(replay.end(), ts.begin(), ts.begin() + 100);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(replay.begin(), replay.end(), rng);
    Graph b;
    for (const auto& t : replay) b.insert(t);
    CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    CHECK(b.spo_size() == b.pos_size());
    CHECK(b.pos_size() == b.osp_size());
  }
}

TEST_CASE("iteration is lexicographic") {
  std::mt19937 rng(3);
  Graph g = random_graph(rng, random_vocab(30), 300);
  CHECK(std::is_sorted(g.begin(), g.end()));
}

TEST_CASE("resolve") {
  Graph g;
  CHECK(g.resolve("sealit:Ship") == Iri("http://www.sealitproject.eu/ontology/Ship"));
  CHECK(g.resolve("<http://a/b>") == Iri("http://a/b"));
  CHECK(g.resolve("crm:P14_carried_out_by") == Iri("http://www.cidoc-crm.org/cidoc-crm/P14_carried_out_by"));
  CHECK_THROWS_AS(g.resolve("nope:x"), Error);
  for (const char* p : {"sealit", "crm", "rdf", "rdfs"}) CHECK(g.prefixes().count(p) == 1);
}

TEST_CASE("resolve is injective within a namespace") {
  Graph g;
  std::set<Iri> seen;
  for (const std::string prefix : {"sealit", "crm", "rdfs"}) {
    for (int i = 0; i < 200; ++i) {
      CHECK(seen.insert(g.resolve(prefix + ":x" + std::to_string(i))).second);
    }
  }
}

TEST_CASE("insert_all unions triples and prefixes") {
  Graph a, b;
  a.insert(Iri("http://s"), Iri("http://p"), Literal("1"));
  b.insert(Iri("http://s"), Iri("http://p"), Literal("2"));
  b.set_prefix("ex", "http://example.org/");
  a.insert_all(b);
  CHECK(a.size() == 2);
  CHECK(a.resolve("ex:y") == Iri("http://example.org/y"));
}
