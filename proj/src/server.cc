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

#include "mariner/server.h"

#include <charconv>

#include "httplib.h"
#include "json.hpp"
#include "mariner/error.h"

namespace mariner {

using nlohmann::json;

struct FacetServer::Impl {
  Snapshot kb;
  const FacetRegistry& registry;
  httplib::Server http;

  Impl(Snapshot k, const FacetRegistry& r) : kb(std::move(k)), registry(r) {}
};

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

void reply(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void reply_error(httplib::Response& res, const std::string& message, const char* code, int status = 400) {
  reply(res, json{{"error", message}, {"code", code}}, status);
}

// Runs a handler, turning library errors into 400 responses.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    reply_error(res, e.what(), to_string(e.code()));
  } catch (const json::exception& e) {
    reply_error(res, e.what(), "syntax-error");
  }
}

EntailmentMode mode_field(const json& body) {
  if (!body.contains("mode") || body["mode"].is_null()) return EntailmentMode::kRdfs;
  if (!body["mode"].is_string()) throw Error(ErrorCode::kSyntaxError, "'mode' must be \"none\" or \"rdfs\"");
  auto mode = parse_entailment_mode(body["mode"].get<std::string>());
  if (!mode) throw Error(ErrorCode::kSyntaxError, "'mode' must be \"none\" or \"rdfs\"");
  return *mode;
}

json parse_body(const httplib::Request& req) {
  json body = json::parse(req.body, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded() || !body.is_object()) {
    throw Error(ErrorCode::kSyntaxError, "request body must be a JSON object");
  }
  return body;
}

}  // namespace

FacetServer::FacetServer(Snapshot kb, const FacetRegistry& registry, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>(std::move(kb), registry)) {
  Impl& s = *impl_;
  httplib::Server& http = s.http;

  http.Get("/api/categories", [&s](const httplib::Request&, httplib::Response& res) {
    json out = json::array();
    for (const auto& c : s.registry.categories()) out.push_back({{"id", c.id}, {"label", c.label}});
    reply(res, out);
  });

  http.Get(R"(/api/categories/([^/]+)/connections)", [&s](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      json out = json::array();
      for (const ConnectionDef* c : s.registry.connections_from(req.matches[1].str())) {
        out.push_back({{"id", c->id}, {"label", c->label}, {"target", c->target}});
      }
      reply(res, out);
    });
  });

  http.Get("/api/instances", [&s](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (!req.has_param("category")) throw Error(ErrorCode::kUnknownCategory, "missing 'category' parameter");
      size_t limit = 20;
      if (req.has_param("limit")) {
        std::string v = req.get_param_value("limit");
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), limit);
        if (ec != std::errc() || p != v.data() + v.size()) {
          throw Error(ErrorCode::kSyntaxError, "'limit' must be a non-negative integer");
        }
      }
      json out = json::array();
      for (const Instance& i : list_instances(s.registry, *s.kb, req.get_param_value("category"),
                                              req.get_param_value("q"), limit)) {
        out.push_back({{"iri", i.iri.str()}, {"label", i.label}});
      }
      reply(res, out);
    });
  });

  http.Post("/api/query", [&s](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      json body = parse_body(req);
      EntailmentMode mode = mode_field(body);
      QueryState state = parse_query_state(req.body);
      RunResult r = run(state, s.registry, *s.kb, mode);
      json out;
      if (!r.grouped) {
        out["columns"] = {"iri", "label"};
        out["rows"] = json::array();
        for (const Instance& i : r.rows) out["rows"].push_back({{"iri", i.iri.str()}, {"label", i.label}});
      } else {
        out["buckets"] = json::array();
        for (const Bucket& b : r.aggregation.buckets) {
          out["buckets"].push_back({{"label", b.label}, {"iri", b.iri.str()}, {"count", b.count}});
        }
        out["total"] = r.aggregation.total;
      }
      reply(res, out);
    });
  });

  http.Post("/api/sparql", [&s](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      json body = parse_body(req);
      if (!body.contains("query") || !body["query"].is_string()) {
        throw Error(ErrorCode::kSyntaxError, "'query' must be a string");
      }
      QueryAst ast = parse_query(body["query"].get<std::string>());
      BindingsTable table = evaluate(ast, *s.kb, s.registry.schema(), mode_field(body));
      res.status = 200;
      res.set_content(to_json(table), kJson);
    });
  });

  http.Get("/api/stats", [&s](const httplib::Request&, httplib::Response& res) {
    KbStats st = compute_stats(*s.kb, s.registry.schema());
    reply(res, json{{"triples", st.triples},
                    {"ships", st.ships},
                    {"persons", st.persons},
                    {"legalBodies", st.legal_bodies},
                    {"locations", st.locations}});
  });

  if (static_dir) http.set_mount_point("/", static_dir->string());
}

FacetServer::~FacetServer() { stop(); }

int FacetServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool FacetServer::listen() { return impl_->http.listen_after_bind(); }

void FacetServer::stop() { impl_->http.stop(); }

void FacetServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace mariner
