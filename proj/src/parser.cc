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

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adgm/parser.h"

namespace adgm {

namespace {

// Largest accepted `complexity` value. Keeps every metric sum far from
// overflow.
constexpr std::uint64_t kMaxComplexity = std::numeric_limits<std::uint32_t>::max();

std::string Describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kIdent:
      return "identifier";
    case TokenKind::kInt:
      return "integer";
    case TokenKind::kLBrace:
      return "'{'";
    case TokenKind::kRBrace:
      return "'}'";
    case TokenKind::kColon:
      return "':'";
    case TokenKind::kSemicolon:
      return "';'";
    case TokenKind::kDot:
      return "'.'";
    case TokenKind::kComma:
      return "','";
    case TokenKind::kArrow:
      return "'->'";
    case TokenKind::kBackArrow:
      return "'<-'";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "token";
}

std::string DescribeFound(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::kKeyword:
      return "keyword '" + tok.lexeme + "'";
    case TokenKind::kIdent:
      return "identifier '" + tok.lexeme + "'";
    case TokenKind::kInt:
      return "integer " + tok.lexeme;
    default:
      return Describe(tok.kind);
  }
}

std::string Quote(std::string_view kw) { return "'" + std::string(kw) + "'"; }

class Parser {
 public:
  Parser(std::vector<Token> tokens, Token end)
      : tokens_(std::move(tokens)), end_(std::move(end)) {}

  Architecture ParseArchitecture() {
    Architecture arch;
    arch.pos = Pos(Peek());
    ExpectKeyword("architecture");
    arch.name = ExpectIdent();
    Expect(TokenKind::kLBrace);
    while (!At(TokenKind::kRBrace)) {
      const Token& tok = Peek();
      if (tok.kind != TokenKind::kKeyword) {
        Fail({"'component'", "'resource'", "'attach'", "'before'",
              "'exclusive'", "'internal'", "'}'"});
      }
      if (tok.lexeme == "component") {
        arch.components.push_back(ParseComponent());
      } else if (tok.lexeme == "resource") {
        ResourceDecl res;
        res.pos = Pos(Next());
        res.name = ExpectIdent();
        Expect(TokenKind::kSemicolon);
        arch.resources.push_back(std::move(res));
      } else if (tok.lexeme == "attach" || tok.lexeme == "before") {
        const bool is_attach = tok.lexeme == "attach";
        Attachment att;
        att.pos = Pos(Next());
        att.from = ParsePortRef();
        Expect(TokenKind::kArrow);
        att.to = ParsePortRef();
        Expect(TokenKind::kSemicolon);
        (is_attach ? arch.attachments : arch.befores).push_back(std::move(att));
      } else if (tok.lexeme == "exclusive") {
        ExclusivePair ex;
        ex.pos = Pos(Next());
        ex.a = ParsePortRef();
        Expect(TokenKind::kComma);
        ex.b = ParsePortRef();
        Expect(TokenKind::kSemicolon);
        arch.exclusives.push_back(std::move(ex));
      } else if (tok.lexeme == "internal") {
        arch.internal_flows.push_back(ParseInternal());
      } else {
        Fail({"'component'", "'resource'", "'attach'", "'before'",
              "'exclusive'", "'internal'", "'}'"});
      }
    }
    Next();
    if (!At(TokenKind::kEnd)) Fail({Describe(TokenKind::kEnd)});
    return arch;
  }

 private:
  static SourcePos Pos(const Token& tok) { return {tok.line, tok.column}; }

  const Token& Peek() const {
    return cursor_ < tokens_.size() ? tokens_[cursor_] : end_;
  }

  const Token& Next() {
    const Token& tok = Peek();
    if (cursor_ < tokens_.size()) ++cursor_;
    return tok;
  }

  bool At(TokenKind kind) const { return Peek().kind == kind; }

  bool AtKeyword(std::string_view kw) const {
    return At(TokenKind::kKeyword) && Peek().lexeme == kw;
  }

  [[noreturn]] void Fail(std::vector<std::string> expected) const {
    const Token& tok = Peek();
    std::string message = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
      message += expected[i];
    }
    message += ", found " + DescribeFound(tok);
    throw ParseError(std::move(message), tok.line, tok.column,
                     std::move(expected));
  }

  const Token& Expect(TokenKind kind) {
    if (!At(kind)) Fail({Describe(kind)});
    return Next();
  }

  void ExpectKeyword(std::string_view kw) {
    if (!AtKeyword(kw)) Fail({Quote(kw)});
    Next();
  }

  std::string ExpectIdent() { return Expect(TokenKind::kIdent).lexeme; }

  PortRef ParsePortRef() {
    PortRef ref;
    const Token& comp = Expect(TokenKind::kIdent);
    ref.pos = Pos(comp);
    ref.component = comp.lexeme;
    Expect(TokenKind::kDot);
    ref.port = ExpectIdent();
    return ref;
  }

  Component ParseComponent() {
    Component comp;
    comp.pos = Pos(Next());
    comp.name = ExpectIdent();
    Expect(TokenKind::kLBrace);
    bool has_complexity = false;
    while (!At(TokenKind::kRBrace)) {
      if (AtKeyword("port")) {
        Port port;
        port.pos = Pos(Next());
        port.name = ExpectIdent();
        Expect(TokenKind::kColon);
        if (AtKeyword("in")) {
          port.direction = Direction::kIn;
        } else if (AtKeyword("out")) {
          port.direction = Direction::kOut;
        } else if (AtKeyword("inout")) {
          port.direction = Direction::kInOut;
        } else {
          Fail({"'in'", "'out'", "'inout'"});
        }
        Next();
        Expect(TokenKind::kSemicolon);
        comp.ports.push_back(std::move(port));
      } else if (AtKeyword("complexity")) {
        const Token& kw = Next();
        const Token& value = Peek();
        Expect(TokenKind::kInt);
        if (has_complexity) {
          throw ParseError("duplicate complexity in component '" + comp.name +
                               "'",
                           kw.line, kw.column);
        }
        comp.complexity = ParseComplexity(value);
        has_complexity = true;
        Expect(TokenKind::kSemicolon);
      } else if (AtKeyword("reads") || AtKeyword("writes")) {
        ResourceAccess access;
        const Token& kw = Next();
        access.pos = Pos(kw);
        access.mode =
            kw.lexeme == "reads" ? AccessMode::kReads : AccessMode::kWrites;
        access.resource = ExpectIdent();
        ExpectKeyword("via");
        access.via = ExpectIdent();
        Expect(TokenKind::kSemicolon);
        comp.accesses.push_back(std::move(access));
      } else {
        Fail({"'port'", "'complexity'", "'reads'", "'writes'", "'}'"});
      }
    }
    Next();
    return comp;
  }

  static std::uint64_t ParseComplexity(const Token& tok) {
    std::uint64_t value = 0;
    for (char c : tok.lexeme) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > kMaxComplexity) {
        throw ParseError("complexity " + tok.lexeme + " exceeds " +
                             std::to_string(kMaxComplexity),
                         tok.line, tok.column);
      }
    }
    return value;
  }

  InternalFlow ParseInternal() {
    InternalFlow flow;
    flow.pos = Pos(Next());
    const PortRef out = ParsePortRef();
    Expect(TokenKind::kBackArrow);
    const PortRef in = ParsePortRef();
    Expect(TokenKind::kSemicolon);
    if (in.component != out.component) {
      throw ParseError("internal flow must stay within component '" +
                           out.component + "', found '" + in.component + "'",
                       in.pos.line, in.pos.column);
    }
    flow.component = out.component;
    flow.out_port = out.port;
    flow.in_port = in.port;
    flow.out_pos = out.pos;
    flow.in_pos = in.pos;
    return flow;
  }

  std::vector<Token> tokens_;
  Token end_;
  std::size_t cursor_ = 0;
};

Token EndToken(std::string_view source) {
  int line = 1;
  int column = 1;
  for (char c : source) {
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {TokenKind::kEnd, "", line, column};
}

}  // namespace

Architecture Parse(std::string_view source) {
  Parser parser(Tokenize(source), EndToken(source));
  Architecture arch = parser.ParseArchitecture();
  const ValidationOutcome outcome = Validate(arch);
  if (!outcome.ok()) {
    const Violation& v = outcome.violations.front();
    throw ParseError(v.message, v.pos.line, v.pos.column);
  }
  return arch;
}

}  // namespace adgm
