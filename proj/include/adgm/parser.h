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

// MiniADL front end.
//
//   architecture ::= "architecture" IDENT "{" item* "}"
//   item         ::= component | resource | attach | before | exclusive
//                  | internal
//   component    ::= "component" IDENT "{" compitem* "}"
//   compitem     ::= port | complexity | access
//   port         ::= "port" IDENT ":" ("in" | "out" | "inout") ";"
//   complexity   ::= "complexity" INT ";"
//   access       ::= ("reads" | "writes") IDENT "via" IDENT ";"
//   resource     ::= "resource" IDENT ";"
//   attach       ::= "attach" portref "->" portref ";"
//   before       ::= "before" portref "->" portref ";"
//   exclusive    ::= "exclusive" portref "," portref ";"
//   internal     ::= "internal" portref "<-" portref ";"
//   portref      ::= IDENT "." IDENT
//
// `//` starts a comment running to end of line. Keywords are reserved.
// Columns count bytes.

#ifndef ADGM_PARSER_H_
#define ADGM_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adgm/model.h"

namespace adgm {

enum class TokenKind {
  kKeyword,
  kIdent,
  kInt,
  kLBrace,
  kRBrace,
  kColon,
  kSemicolon,
  kDot,
  kComma,
  kArrow,      // ->
  kBackArrow,  // <-
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  int line;
  int column;
};

bool operator==(const Token& a, const Token& b);

// Thrown for lexical, syntax and semantic errors. `expected` is non-empty for
// syntax errors and lists the token descriptions that would have been
// accepted at the error position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column,
             std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

bool IsKeyword(std::string_view word);

// Splits `source` into tokens. Comments and whitespace are dropped; the
// trailing kEnd token is not included. Throws ParseError on an illegal
// character or on malformed UTF-8.
std::vector<Token> Tokenize(std::string_view source);

// Parses and validates. The returned model satisfies Validate(); the first
// validation violation is raised as a ParseError at its position.
Architecture Parse(std::string_view source);

}  // namespace adgm

#endif  // ADGM_PARSER_H_
