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
#include <cctype>
#include <fstream>
#include <sstream>

#include "mariner/error.h"
#include "mariner/mapping.h"

namespace mariner {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int Table::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

Table parse_csv(std::string_view text, const std::string& name) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  int line = 1;
  int quote_line = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // A blank line is not a record.
    if (!(record.size() == 1 && record[0].empty())) records.push_back(std::move(record));
    record.clear();
  };

  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started && !trim(field).empty()) {
          throw Error(ErrorCode::kMalformedRow, name + ":" + std::to_string(line) + ": stray quote");
        }
        field.clear();
        in_quotes = true;
        field_started = true;
        quote_line = line;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::kMalformedRow,
                name + ":" + std::to_string(quote_line) + ": unterminated quoted field");
  }
  if (field_started || !record.empty()) end_record();

  Table table;
  if (records.empty()) return table;
  for (const auto& h : records[0]) table.header.push_back(trim(h));
  for (size_t i = 0; i < table.header.size(); ++i) {
    for (size_t j = i + 1; j < table.header.size(); ++j) {
      if (table.header[i] == table.header[j]) {
        throw Error(ErrorCode::kMalformedRow, name + ": duplicate column '" + table.header[i] + "'");
      }
    }
  }
  for (size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw Error(ErrorCode::kMalformedRow,
                  name + ": row " + std::to_string(r) + " has " + std::to_string(records[r].size()) +
                      " cells, header has " + std::to_string(table.header.size()));
    }
    std::vector<std::optional<std::string>> row;
    for (auto& cell : records[r]) {
      std::string v = trim(cell);
      if (v.empty()) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(std::move(v));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

RecordBundle load_bundle(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::kIo, "not a record bundle directory: " + dir.string());
  RecordBundle bundle;
  bundle.origin = dir.string();

  fs::path meta = dir / "meta.txt";
  std::istringstream in(read_file(meta));
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::kIo, meta.string() + ": expected 'key: value'");
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "template_id") {
      bundle.template_id = value;
    } else if (key == "record_id") {
      bundle.record_id = value;
    } else if (key == "source_label") {
      bundle.source_label = value;
    }
  }
  if (bundle.template_id.empty() || bundle.record_id.empty()) {
    throw Error(ErrorCode::kIo, meta.string() + ": template_id and record_id are required");
  }
  if (bundle.source_label.empty()) bundle.source_label = bundle.record_id;

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    bundle.tables.emplace(f.stem().string(), parse_csv(read_file(f), f.string()));
  }
  return bundle;
}

}  // namespace mariner
