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

// mariner: ingest archival records, validate, query and serve the knowledge
// graph.
//
// Exit codes: 0 success, 1 validation errors under --strict, 2 usage error,
// 3 I/O or parse failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mariner/error.h"
#include "mariner/facet.h"
#include "mariner/mapping.h"
#include "mariner/ontology.h"
#include "mariner/query.h"
#include "mariner/server.h"
#include "mariner/turtle.h"

namespace {

using namespace mariner;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;
constexpr int kFailure = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out.flush()) throw Error(ErrorCode::kIo, "cannot write " + path);
}

Graph load_kb(const std::string& path) {
  TurtleParseResult r = parse_turtle(read_file(path));
  for (const auto& d : r.diagnostics) std::cerr << path << ":" << d.to_string() << "\n";
  if (!r.ok()) throw Error(ErrorCode::kSyntaxError, path + ": not a valid knowledge graph");
  return std::move(r.graph);
}

// Prints violations to stderr; returns the number at ERROR severity.
size_t report(const std::vector<Violation>& violations, std::ostream& out) {
  size_t errors = 0;
  for (const Violation& v : violations) {
    if (v.severity == Severity::kError) ++errors;
    out << (v.severity == Severity::kError ? "ERROR" : "WARNING") << "\t" << to_string(v.kind) << "\t"
        << Term(v.triple.subject).to_ntriples() << " " << Term(v.triple.predicate).to_ntriples() << " "
        << v.triple.object.to_ntriples() << "\t" << v.message << "\n";
  }
  return errors;
}

struct IngestArgs {
  std::vector<std::string> mappings;
  std::vector<std::string> records;
  std::string out;
  bool strict = false;
};

int cmd_ingest(const IngestArgs& a) {
  const OntologySchema& schema = OntologySchema::builtin();
  std::map<std::string, MappingSpec> specs;
  for (const auto& path : a.mappings) {
    MappingSpec spec;
    try {
      spec = parse_mapping(read_file(path), schema);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
    std::string id = spec.template_id;
    if (!specs.emplace(id, std::move(spec)).second) {
      throw Error(ErrorCode::kTemplateMismatch, path + ": a mapping for template '" + id + "' was already given");
    }
  }
  Graph kb;
  for (const auto& dir : a.records) {
    RecordBundle bundle = load_bundle(dir);
    auto it = specs.find(bundle.template_id);
    if (it == specs.end()) {
      throw Error(ErrorCode::kTemplateMismatch, dir + ": no mapping for template '" + bundle.template_id + "'");
    }
    MappingResult r = apply_mapping(it->second, bundle, schema);
    kb.insert_all(r.graph);
  }
  // Validate the union: typing may come from another record.
  size_t errors = report(schema.validate(kb), std::cerr);
  write_file(a.out, serialize_turtle(kb));
  std::cerr << "wrote " << kb.size() << " triples to " << a.out << " (" << errors << " errors)\n";
  return a.strict && errors > 0 ? kViolations : kOk;
}

int cmd_query(const std::string& kb_path, const std::string& query_path, const std::string& mode_name,
              const std::string& format) {
  auto mode = parse_entailment_mode(mode_name);
  Graph kb = load_kb(kb_path);
  QueryAst ast;
  try {
    ast = parse_query(read_file(query_path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), query_path + ":" + e.what());
  }
  BindingsTable table = evaluate(ast, kb, OntologySchema::builtin(), *mode);
  std::cout << (format == "json" ? to_json(table) : to_csv(table));
  return kOk;
}

int cmd_validate(const std::string& kb_path, bool strict) {
  Graph kb = load_kb(kb_path);
  auto violations = OntologySchema::builtin().validate(kb);
  size_t errors = report(violations, std::cout);
  std::cout << violations.size() << " violations, " << errors << " errors\n";
  return strict && errors > 0 ? kViolations : kOk;
}

int cmd_stats(const std::string& kb_path) {
  Graph kb = load_kb(kb_path);
  KbStats s = compute_stats(kb, OntologySchema::builtin());
  std::cout << "triples: " << s.triples << "\n"
            << "ships: " << s.ships << "\n"
            << "persons: " << s.persons << "\n"
            << "legal_bodies: " << s.legal_bodies << "\n"
            << "locations: " << s.locations << "\n";
  return kOk;
}

int cmd_serve(const std::string& kb_path, const std::string& connections, int port, const std::string& host,
              const std::string& static_dir) {
  if (const char* env = std::getenv("PORT")) {
    try {
      port = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "mariner: PORT is not a number\n";
      return kUsage;
    }
  }
  auto kb = std::make_shared<const Graph>(load_kb(kb_path));
  FacetRegistry registry(OntologySchema::builtin(), load_connections(connections));
  std::optional<std::filesystem::path> dir;
  if (!static_dir.empty()) dir = static_dir;
  FacetServer server(kb, registry, dir);
  int bound = server.bind(host, port);
  if (bound < 0) throw Error(ErrorCode::kIo, "cannot listen on " + host + ":" + std::to_string(port));
  std::cerr << "serving " << kb->size() << " triples on http://" << host << ":" << bound << "\n";
  return server.listen() ? kOk : kFailure;
}

int cmd_export_ontology(const std::string& out) {
  std::string ttl = serialize_turtle(OntologySchema::builtin().to_graph());
  if (out.empty() || out == "-") {
    std::cout << ttl;
  } else {
    write_file(out, ttl);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-backed knowledge graph for maritime history records", "mariner"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Map record bundles to a Turtle knowledge graph");
  ingest_cmd->add_option("--mapping", ingest.mappings, "Mapping file (.map)");
  ingest_cmd->add_option("--records", ingest.records, "Record bundle directory");
  ingest_cmd->add_option("--out", ingest.out, "Output Turtle file")->required();
  ingest_cmd->add_flag("--strict", ingest.strict, "Exit 1 on schema violations");

  std::string kb, query, mode = "rdfs", format = "csv";
  auto* query_cmd = app.add_subcommand("query", "Evaluate a query file against a knowledge graph");
  query_cmd->add_option("--kb", kb, "Knowledge graph (.ttl)")->required();
  query_cmd->add_option("--query", query, "Query file (.rq)")->required();
  query_cmd->add_option("--mode", mode, "Entailment: rdfs or none")->check(CLI::IsMember({"rdfs", "none"}));
  query_cmd->add_option("--format", format, "Output: csv or json")->check(CLI::IsMember({"csv", "json"}));

  bool strict = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check a knowledge graph against the ontology");
  validate_cmd->add_option("--kb", kb, "Knowledge graph (.ttl)")->required();
  validate_cmd->add_flag("--strict", strict, "Exit 1 on errors");

  auto* stats_cmd = app.add_subcommand("stats", "Print triple and entity counts");
  stats_cmd->add_option("--kb", kb, "Knowledge graph (.ttl)")->required();

  std::string connections, host = "127.0.0.1", static_dir;
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the facet API over HTTP");
  serve_cmd->add_option("--kb", kb, "Knowledge graph (.ttl)")->required();
  serve_cmd->add_option("--connections", connections, "Connection config (.json)")->required();
  serve_cmd->add_option("--port", port, "Port (PORT overrides)");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--static", static_dir, "Directory of UI assets to serve at /");

  std::string out;
  auto* export_cmd = app.add_subcommand("export-ontology", "Write the embedded ontology as Turtle");
  export_cmd->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(ingest);
    if (*query_cmd) return cmd_query(kb, query, mode, format);
    if (*validate_cmd) return cmd_validate(kb, strict);
    if (*stats_cmd) return cmd_stats(kb);
    if (*serve_cmd) return cmd_serve(kb, connections, port, host, static_dir);
    if (*export_cmd) return cmd_export_ontology(out);
  } catch (const Error& e) {
    std::cerr << "mariner: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "mariner: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
