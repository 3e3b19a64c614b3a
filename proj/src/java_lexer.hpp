#pragma once

// Token stream for Java-like source. Comments are dropped; a token remembers
// whether a /** ... */ block sits directly in front of it.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seqmatch::java {

enum class TokenKind { Identifier, Number, String, Char, Punct };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t offset = 0;  // byte offset into the source
  std::size_t line = 1;    // 1-based
  bool doc_before = false;

  bool is(std::string_view s) const { return text == s; }
  bool ident() const { return kind == TokenKind::Identifier; }
};

std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);
bool is_primitive(std::string_view word);  // includes void
bool is_modifier(std::string_view word);

}  // namespace seqmatch::java
