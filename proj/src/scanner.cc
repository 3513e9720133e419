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

#include "scanner.h"

#include <cctype>

namespace mariner::detail {

std::optional<size_t> find_invalid_utf8(std::string_view text) {
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    int len;
    unsigned long cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (int k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    static const unsigned long kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::nullopt;
}

bool is_pn_chars_base(unsigned char c) { return std::isalpha(c) || c >= 0x80; }

namespace {

bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

}  // namespace

void Scanner::advance(size_t n) {
  for (size_t k = 0; k < n && pos_ < text_.size(); ++k) {
    unsigned char c = static_cast<unsigned char>(text_[pos_++]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }
}

void Scanner::skip_trivia() {
  while (!at_end()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance();
    } else if (c == '#') {
      while (!at_end() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

bool Scanner::at_keyword(std::string_view kw) const {
  if (pos_ + kw.size() > text_.size()) return false;
  for (size_t i = 0; i < kw.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) !=
        std::tolower(static_cast<unsigned char>(kw[i]))) {
      return false;
    }
  }
  unsigned char next = static_cast<unsigned char>(peek(kw.size()));
  return !(is_name_char(next) || next == ':');
}

void Scanner::fail(const std::string& message) const { fail_at(line_, column_, message); }

void Scanner::fail_at(int line, int column, const std::string& message) const {
  throw ScanError{line, column, message};
}

unsigned long Scanner::read_hex(int digits) {
  unsigned long v = 0;
  for (int i = 0; i < digits; ++i) {
    char c = peek();
    if (!std::isxdigit(static_cast<unsigned char>(c))) fail("expected hex digit in escape");
    v = v * 16 + static_cast<unsigned long>(std::isdigit(static_cast<unsigned char>(c))
                                                ? c - '0'
                                                : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    advance();
  }
  return v;
}

void Scanner::append_codepoint(std::string& out, unsigned long cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("escape is not a Unicode scalar value");
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string Scanner::read_iriref() {
  int line = line_, col = column_;
  advance();  // '<'
  std::string out;
  while (true) {
    if (at_end()) fail_at(line, col, "unterminated IRI");
    char c = peek();
    if (c == '>') {
      advance();
      return out;
    }
    if (c == '\n' || c == '\r') fail_at(line, col, "unterminated IRI");
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || c == '<' || c == '"') fail("character not allowed in IRI");
    if (c == '\\') {
      advance();
      if (peek() == 'u') {
        advance();
        append_codepoint(out, read_hex(4));
      } else if (peek() == 'U') {
        advance();
        append_codepoint(out, read_hex(8));
      } else {
        fail("invalid escape in IRI");
      }
      continue;
    }
    out += c;
    advance();
  }
}

bool Scanner::at_pname() const {
  size_t i = pos_;
  if (i < text_.size() && is_pn_chars_base(static_cast<unsigned char>(text_[i]))) {
    ++i;
    while (i < text_.size()) {
      unsigned char c = static_cast<unsigned char>(text_[i]);
      if (is_name_char(c) || (c == '.' && i + 1 < text_.size() &&
                              is_name_char(static_cast<unsigned char>(text_[i + 1])))) {
        ++i;
      } else {
        break;
      }
    }
  }
  return i < text_.size() && text_[i] == ':';
}

std::pair<std::string, std::string> Scanner::read_pname() {
  std::string prefix;
  while (!at_end() && peek() != ':') {
    prefix += peek();
    advance();
  }
  if (at_end()) fail("expected ':' in prefixed name");
  advance();  // ':'
  std::string local;
  while (!at_end()) {
    unsigned char c = static_cast<unsigned char>(peek());
    if (is_name_char(c) || c == ':') {
      local += static_cast<char>(c);
      advance();
    } else if (c == '%') {
      if (!std::isxdigit(static_cast<unsigned char>(peek(1))) ||
          !std::isxdigit(static_cast<unsigned char>(peek(2)))) {
        fail("'%' must be followed by two hex digits");
      }
      local += text_.substr(pos_, 3);
      advance(3);
    } else if (c == '.' && (is_name_char(static_cast<unsigned char>(peek(1))) || peek(1) == ':' ||
                            peek(1) == '%')) {
      local += '.';
      advance();
    } else {
      break;
    }
  }
  return {prefix, local};
}

std::string Scanner::read_string() {
  int line = line_, col = column_;
  char quote = peek();
  bool long_form = peek(1) == quote && peek(2) == quote;
  advance(long_form ? 3 : 1);
  std::string out;
  while (true) {
    if (at_end()) fail_at(line, col, "unterminated string literal");
    char c = peek();
    if (c == quote && !long_form) {
      advance();
      return out;
    }
    // """ closes a long string unless more quotes follow; extra ones are content
    if (c == quote && peek(1) == quote && peek(2) == quote && peek(3) != quote) {
      advance(3);
      return out;
    }
    if ((c == '\n' || c == '\r') && !long_form) fail_at(line, col, "unterminated string literal");
    if (c == '\\') {
      advance();
      char e = peek();
      switch (e) {
        case 't': out += '\t'; advance(); break;
        case 'b': out += '\b'; advance(); break;
        case 'n': out += '\n'; advance(); break;
        case 'r': out += '\r'; advance(); break;
        case 'f': out += '\f'; advance(); break;
        case '"': out += '"'; advance(); break;
        case '\'': out += '\''; advance(); break;
        case '\\': out += '\\'; advance(); break;
        case 'u': advance(); append_codepoint(out, read_hex(4)); break;
        case 'U': advance(); append_codepoint(out, read_hex(8)); break;
        default: fail("invalid escape sequence in string");
      }
      continue;
    }
    out += c;
    advance();
  }
}

std::string Scanner::read_langtag() {
  std::string tag;
  while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
    tag += peek();
    advance();
  }
  return tag;
}

std::string Scanner::read_varname() {
  std::string name;
  while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
    name += peek();
    advance();
  }
  if (name.empty()) fail("expected variable name");
  return name;
}

}  // namespace mariner::detail
