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

// Character-level scanner shared by the Turtle and query parsers.

#include <optional>
#include <string>
#include <string_view>

namespace mariner::detail {

struct ScanError {
  int line;
  int column;
  std::string message;
};

// Returns the byte offset of the first invalid UTF-8 sequence, if any.
std::optional<size_t> find_invalid_utf8(std::string_view text);

bool is_pn_chars_base(unsigned char c);

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void advance(size_t n = 1);
  size_t pos() const { return pos_; }
  int line() const { return line_; }
  int column() const { return column_; }

  // Whitespace and '#' comments.
  void skip_trivia();
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  // Case-insensitive keyword followed by a non-name character.
  bool at_keyword(std::string_view kw) const;

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(int line, int column, const std::string& message) const;

  // <...> with \u/\U escapes decoded. Positioned on '<'.
  std::string read_iriref();
  // prefix ':' local. Returns {prefix, local}. Positioned on the first char.
  std::pair<std::string, std::string> read_pname();
  bool at_pname() const;
  // "..." or '...' with ECHAR/UCHAR escapes decoded. Positioned on the quote.
  std::string read_string();
  // Positioned after '@'.
  std::string read_langtag();
  // [A-Za-z_0-9]+ after '?' or '$'.
  std::string read_varname();

 private:
  void append_codepoint(std::string& out, unsigned long cp);
  unsigned long read_hex(int digits);

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace mariner::detail
