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

#include <atomic>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "mariner/server.h"
#include "test_support.h"

using namespace mariner;
using namespace mariner::testing;
using nlohmann::json;

namespace {

// One server per test binary, on a free port.
struct Fixture {
  FacetRegistry registry = fixture_registry();
  Snapshot kb = std::make_shared<const Graph>(fixture_kb());
  FacetServer server{kb, registry};
  int port = -1;
  std::thread thread;

  Fixture() {
    port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    thread = std::thread([this] { server.listen(); });
    server.wait_until_ready();
  }
  ~Fixture() {
    server.stop();
    thread.join();
  }
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

httplib::Client client() {
  httplib::Client c("127.0.0.1", fixture().port);
  c.set_read_timeout(10, 0);
  return c;
}

json get_json(const std::string& path, int want_status = 200) {
  auto res = client().Get(path);
  REQUIRE(res);
  CHECK(res->status == want_status);
  CHECK(res->get_header_value("Content-Type").rfind("application/json", 0) == 0);
  return json::parse(res->body);
}

json post_json(const std::string& path, const std::string& body, int want_status = 200) {
  auto res = client().Post(path, body, "application/json");
  REQUIRE(res);
  CHECK(res->status == want_status);
  return json::parse(res->body);
}

const std::string kArrivedMarseilleState =
    R"({"root":"person","clauses":[{"connection":"crew_member_of","state":{"root":"ship","clauses":[
      {"connection":"arrived_at","instance":"https://rs.sealitproject.eu/kb/location/Marseille"}]}}])";

}  // namespace

TEST_CASE("categories") {
  json j = get_json("/api/categories");
  REQUIRE(j.size() == 9);
  CHECK(j[0] == json{{"id", "ship"}, {"label", "Ship"}});
}

TEST_CASE("connections of a category") {
  json j = get_json("/api/categories/person/connections");
  std::set<std::string> ids;
  for (const auto& c : j) {
    ids.insert(c["id"].get<std::string>());
    CHECK(c.contains("label"));
    CHECK(c.contains("target"));
  }
  CHECK(ids.count("crew_member_of") == 1);
  CHECK(ids.count("has_residence") == 1);
  json bad = get_json("/api/categories/planet/connections", 400);
  CHECK(bad["code"] == "unknown-category");
}

TEST_CASE("instances") {
  json j = get_json("/api/instances?category=place&q=Mar&limit=10");
  REQUIRE(j.size() == 1);
  CHECK(j[0]["iri"] == "https://rs.sealitproject.eu/kb/location/Marseille");
  CHECK(j[0]["label"] == "Marseille");
  CHECK(get_json("/api/instances?category=place&q=&limit=0").empty());
  CHECK(get_json("/api/instances?category=ship").size() == 3);
  CHECK(get_json("/api/instances?category=ship&limit=-1", 400)["code"] == "syntax-error");
  CHECK(get_json("/api/instances?category=planet", 400)["code"] == "unknown-category");
  CHECK(get_json("/api/instances", 400).contains("error"));
}

TEST_CASE("query rows") {
  json j = post_json("/api/query", kArrivedMarseilleState + "}");
  CHECK(j["columns"] == json::array({"iri", "label"}));
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["label"] == "Giacomo Razeto");
  CHECK(j["rows"][1]["iri"] == "https://rs.sealitproject.eu/kb/person/Luigi_Mortola");
}

TEST_CASE("query buckets") {
  json j = post_json("/api/query", kArrivedMarseilleState + R"(,"groupBy":"has_residence"})");
  REQUIRE(j["buckets"].size() == 1);
  CHECK(j["buckets"][0]["label"] == "Camogli");
  CHECK(j["buckets"][0]["count"] == 2);
  CHECK(j["total"] == 2);

  json all = post_json("/api/query", R"({"root":"person","groupBy":"has_residence","mode":"none"})");
  REQUIRE(all["buckets"].size() == 2);
  CHECK(all["buckets"][1]["label"] == "unknown");
  CHECK(all["total"] == 3);
}

TEST_CASE("query errors") {
  CHECK(post_json("/api/query", "not json", 400)["code"] == "syntax-error");
  CHECK(post_json("/api/query", R"({"root":"planet"})", 400)["code"] == "unknown-category");
  CHECK(post_json("/api/query", R"({"root":"ship","clauses":[{"connection":"nope"}]})", 400)["code"] ==
        "unknown-connection");
  CHECK(post_json("/api/query", R"({"root":"ship","mode":"owl"})", 400)["code"] == "syntax-error");
}

TEST_CASE("sparql") {
  std::string q = read_text(data_dir() / "queries" / "voyage_activities_of_aurora.rq");
  json rdfs = post_json("/api/sparql", json{{"query", q}, {"mode", "rdfs"}}.dump());
  CHECK(rdfs["head"]["vars"] == json::array({"activity", "activityName"}));
  CHECK(rdfs["results"]["bindings"].size() == 2);
  json none = post_json("/api/sparql", json{{"query", q}, {"mode", "none"}}.dump());
  CHECK(none["results"]["bindings"].empty());
  json bad = post_json("/api/sparql", json{{"query", "SELECT ?x WHERE {"}}.dump(), 400);
  CHECK(bad["code"] == "syntax-error");
  CHECK(post_json("/api/sparql", R"({"mode":"rdfs"})", 400).contains("error"));
}

TEST_CASE("stats") {
  json j = get_json("/api/stats");
  CHECK(j["ships"] == 3);
  CHECK(j["persons"] == 3);
  CHECK(j["triples"] == fixture().kb->size());
  CHECK(j.contains("legalBodies"));
  CHECK(j["locations"].get<int>() >= 2);
}

TEST_CASE("concurrent readers") {
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 10; ++i) {
        auto res = client().Post("/api/query", kArrivedMarseilleState + "}", "application/json");
        if (res && res->status == 200 && json::parse(res->body)["rows"].size() == 2) ++ok;
      }
    });
  }
  for (auto& t : threads) t.join();
  CHECK(ok == 80);
}
