// Copyright 2026 The reqviz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsl_lexer.hpp"

#include "text_util.hpp"

namespace reqviz::dsl {

namespace {

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '-'; }

class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {
    if (src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  LexResult run() {
    LexResult out;
    while (true) {
      skip_trivia();
      const SourceLocation loc{line_, col_};
      if (pos_ >= src_.size()) {
        out.tokens.push_back(Token{TokenKind::End, "", loc});
        return out;
      }
      const char c = src_[pos_];
      if (c == '{' || c == '}' || c == ':' || c == ',') {
        advance();
        const TokenKind kind = c == '{'   ? TokenKind::LBrace
                               : c == '}' ? TokenKind::RBrace
                               : c == ':' ? TokenKind::Colon
                                          : TokenKind::Comma;
        out.tokens.push_back(Token{kind, std::string(1, c), loc});
      } else if (c == '"') {
        auto tok = string_literal(loc);
        if (!tok) {
          out.error = error_;
          out.tokens.push_back(Token{TokenKind::End, "", loc});
          return out;
        }
        out.tokens.push_back(std::move(*tok));
      } else if (ident_start(c)) {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
        out.tokens.push_back(
            Token{TokenKind::Identifier, std::string(src_.substr(start, pos_ - start)), loc});
      } else {
        std::string shown = (static_cast<unsigned char>(c) < 0x20 ||
                             static_cast<unsigned char>(c) >= 0x7F)
                                ? "byte " + std::to_string(static_cast<unsigned char>(c))
                                : "'" + std::string(1, c) + "'";
        out.error = Diagnostic{ErrorCode::SyntaxError, "", "unexpected character " + shown, loc};
        out.tokens.push_back(Token{TokenKind::End, "", loc});
        return out;
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::optional<Token> string_literal(SourceLocation loc) {
    advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        error_ = Diagnostic{ErrorCode::SyntaxError, "", "unterminated string literal", loc};
        return std::nullopt;
      }
      const char c = src_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const SourceLocation esc_loc{line_, col_};
        advance();
        if (pos_ >= src_.size()) continue;
        const char e = src_[pos_];
        switch (e) {
          case '"': value.push_back('"'); break;
          case '\\': value.push_back('\\'); break;
          case 'n': value.push_back('\n'); break;
          case 't': value.push_back('\t'); break;
          default:
            error_ = Diagnostic{ErrorCode::SyntaxError, "",
                                std::string("unknown escape sequence '\\") + e + "'", esc_loc};
            return std::nullopt;
        }
        advance();
        continue;
      }
      value.push_back(c);
      advance();
    }
    return Token{TokenKind::String, std::move(value), loc};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Diagnostic error_;
};

SourceLocation location_of_offset(std::string_view src, std::size_t offset) {
  SourceLocation loc{1, 1};
  for (std::size_t i = 0; i < offset && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

}  // namespace

LexResult tokenize(std::string_view source) {
  if (const auto bad = text::utf8_error_offset(source); bad != std::string_view::npos) {
    LexResult out;
    const auto loc = location_of_offset(source, bad);
    out.error = Diagnostic{ErrorCode::InvalidEncoding, "", "input is not valid UTF-8", loc};
    out.tokens.push_back(Token{TokenKind::End, "", loc});
    return out;
  }
  return Scanner(source).run();
}

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::String: return "string";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

}  // namespace reqviz::dsl
