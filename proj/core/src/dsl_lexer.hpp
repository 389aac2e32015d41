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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqviz/error.hpp"

namespace reqviz::dsl {

enum class TokenKind { Identifier, String, LBrace, RBrace, Colon, Comma, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // identifier spelling or decoded string contents
  SourceLocation location;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token
  std::optional<Diagnostic> error;
};

LexResult tokenize(std::string_view source);

std::string_view describe(TokenKind kind);

}  // namespace reqviz::dsl
