// Copyright 2026 The adg-metrics Authors
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

#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adgm/parser.h"

namespace adgm {

namespace {

constexpr std::array<std::string_view, 15> kKeywords = {
    "architecture", "component", "port",   "in",        "out",
    "inout",        "complexity", "reads", "writes",    "via",
    "resource",     "attach",     "before", "exclusive", "internal",
};

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsIdentChar(char c) { return IsIdentStart(c) || IsDigit(c); }

// Returns the byte offset of the first malformed UTF-8 sequence, or npos.
// Rejects overlong encodings, surrogates and code points above U+10FFFF.
std::size_t FirstInvalidUtf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    std::uint32_t lo = 0x80;
    std::uint32_t hi = 0xBF;
    if (b0 >= 0xC2 && b0 <= 0xDF) {
      len = 2;
    } else if (b0 >= 0xE0 && b0 <= 0xEF) {
      len = 3;
      if (b0 == 0xE0) lo = 0xA0;
      if (b0 == 0xED) hi = 0x9F;
    } else if (b0 >= 0xF0 && b0 <= 0xF4) {
      len = 4;
      if (b0 == 0xF0) lo = 0x90;
      if (b0 == 0xF4) hi = 0x8F;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      const std::uint32_t min = k == 1 ? lo : 0x80;
      const std::uint32_t max = k == 1 ? hi : 0xBF;
      if (b < min || b > max) return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

std::pair<int, int> LineColumnAt(std::string_view s, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < s.size(); ++i) {
    if (s[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string DescribeByte(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x21 && u < 0x7F) return std::string("'") + c + "'";
  char buf[8];
  std::snprintf(buf, sizeof(buf), "0x%02X", static_cast<unsigned>(u));
  return buf;
}

}  // namespace

bool operator==(const Token& a, const Token& b) {
  return a.kind == b.kind && a.lexeme == b.lexeme && a.line == b.line &&
         a.column == b.column;
}

ParseError::ParseError(std::string message, int line, int column,
                       std::vector<std::string> expected)
    : std::runtime_error(std::move(message)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool IsKeyword(std::string_view word) {
  for (auto kw : kKeywords) {
    if (kw == word) return true;
  }
  return false;
}

std::vector<Token> Tokenize(std::string_view source) {
  if (const auto bad = FirstInvalidUtf8(source);
      bad != std::string_view::npos) {
    const auto [line, column] = LineColumnAt(source, bad);
    throw ParseError("invalid UTF-8 byte " + DescribeByte(source[bad]), line,
                     column);
  }

  std::vector<Token> tokens;
  std::size_t i = 0;
  int line = 1;
  int column = 1;
  const auto advance = [&](std::size_t n) {
    i += n;
    column += static_cast<int>(n);
  };
  const auto emit = [&](TokenKind kind, std::size_t len) {
    tokens.push_back({kind, std::string(source.substr(i, len)), line, column});
    advance(len);
  };

  while (i < source.size()) {
    const char c = source[i];
    if (c == '\n') {
      ++i;
      ++line;
      column = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      while (i < source.size() && source[i] != '\n') advance(1);
    } else if (IsIdentStart(c)) {
      std::size_t len = 1;
      while (i + len < source.size() && IsIdentChar(source[i + len])) ++len;
      const bool kw = IsKeyword(source.substr(i, len));
      emit(kw ? TokenKind::kKeyword : TokenKind::kIdent, len);
    } else if (IsDigit(c)) {
      std::size_t len = 1;
      while (i + len < source.size() && IsDigit(source[i + len])) ++len;
      emit(TokenKind::kInt, len);
    } else if (c == '-' && i + 1 < source.size() && source[i + 1] == '>') {
      emit(TokenKind::kArrow, 2);
    } else if (c == '<' && i + 1 < source.size() && source[i + 1] == '-') {
      emit(TokenKind::kBackArrow, 2);
    } else {
      TokenKind kind;
      switch (c) {
        case '{':
          kind = TokenKind::kLBrace;
          break;
        case '}':
          kind = TokenKind::kRBrace;
          break;
        case ':':
          kind = TokenKind::kColon;
          break;
        case ';':
          kind = TokenKind::kSemicolon;
          break;
        case '.':
          kind = TokenKind::kDot;
          break;
        case ',':
          kind = TokenKind::kComma;
          break;
        default:
          throw ParseError("illegal character " + DescribeByte(c), line,
                           column);
      }
      emit(kind, 1);
    }
  }
  return tokens;
}

}  // namespace adgm
