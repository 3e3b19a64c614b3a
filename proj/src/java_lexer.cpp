#include "java_lexer.hpp"

#include <algorithm>
#include <array>

namespace seqmatch::java {

namespace {

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

// '<' and '>' are never merged (except <= and >=) so nested generics close one at a time.
constexpr std::array<std::string_view, 24> kMultiPunct{
    ">>>=", "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    ">=",   "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "<<", "@",  "#"};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  const std::size_t n = src.size();
  std::size_t i = 0;
  std::size_t line = 1;
  bool pending_doc = false;

  auto count_lines = [&](std::size_t from, std::size_t to) {
    line += static_cast<std::size_t>(std::count(src.begin() + static_cast<std::ptrdiff_t>(from),
                                                src.begin() + static_cast<std::ptrdiff_t>(to), '\n'));
  };
  auto push = [&](TokenKind kind, std::size_t start, std::size_t end) {
    tokens.push_back({kind, src.substr(start, end - start), start, line, pending_doc});
    pending_doc = false;
    count_lines(start, end);
  };

  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const bool doc = i + 2 < n && src[i + 2] == '*' && !(i + 3 < n && src[i + 3] == '/');
      const std::size_t close = src.find("*/", i + 2);
      const std::size_t end = close == std::string_view::npos ? n : close + 2;
      count_lines(i, end);
      i = end;
      pending_doc = doc;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < n && ident_part(static_cast<unsigned char>(src[i]))) ++i;
      push(TokenKind::Identifier, start, i);
      continue;
    }
    if (digit(c) || (c == '.' && i + 1 < n && digit(static_cast<unsigned char>(src[i + 1])))) {
      while (i < n) {
        const unsigned char d = static_cast<unsigned char>(src[i]);
        if ((d == '+' || d == '-') && i > start) {
          const char prev = src[i - 1];
          const bool hex = src.substr(start, 2) == "0x" || src.substr(start, 2) == "0X";
          if (!(prev == 'e' || prev == 'E' || ((prev == 'p' || prev == 'P') && hex))) break;
          if (hex && (prev == 'e' || prev == 'E')) break;
        } else if (!(ident_part(d) || d == '.')) {
          break;
        }
        ++i;
      }
      push(TokenKind::Number, start, i);
      continue;
    }
    if (c == '"') {
      if (src.substr(i, 3) == "\"\"\"") {
        const std::size_t close = src.find("\"\"\"", i + 3);
        i = close == std::string_view::npos ? n : close + 3;
        push(TokenKind::String, start, i);
        continue;
      }
      ++i;
      while (i < n && src[i] != '"' && src[i] != '\n') i += (src[i] == '\\' && i + 1 < n) ? 2 : 1;
      if (i < n && src[i] == '"') ++i;
      push(TokenKind::String, start, std::min(i, n));
      continue;
    }
    if (c == '\'') {
      ++i;
      while (i < n && src[i] != '\'' && src[i] != '\n') i += (src[i] == '\\' && i + 1 < n) ? 2 : 1;
      if (i < n && src[i] == '\'') ++i;
      push(TokenKind::Char, start, std::min(i, n));
      continue;
    }
    std::size_t len = 1;
    for (auto p : kMultiPunct) {
      if (src.substr(i, p.size()) == p) {
        len = p.size();
        break;
      }
    }
    i += len;
    push(TokenKind::Punct, start, i);
  }
  return tokens;
}

bool is_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 53> kKeywords{
      "abstract", "assert",     "boolean",   "break",     "byte",     "case",       "catch",
      "char",     "class",      "const",     "continue",  "default",  "do",         "double",
      "else",     "enum",       "extends",   "final",     "finally",  "float",      "for",
      "goto",     "if",         "implements", "import",   "instanceof", "int",      "interface",
      "long",     "native",     "new",       "package",   "private",  "protected",  "public",
      "return",   "short",      "static",    "strictfp",  "super",    "switch",     "synchronized",
      "this",     "throw",      "throws",    "transient", "try",      "void",       "volatile",
      "while",    "true",       "false",     "null"};
  return std::find(kKeywords.begin(), kKeywords.end(), w) != kKeywords.end();
}

bool is_primitive(std::string_view w) {
  static constexpr std::array<std::string_view, 9> kPrimitives{
      "boolean", "byte", "char", "double", "float", "int", "long", "short", "void"};
  return std::find(kPrimitives.begin(), kPrimitives.end(), w) != kPrimitives.end();
}

bool is_modifier(std::string_view w) {
  static constexpr std::array<std::string_view, 13> kModifiers{
      "public",   "protected", "private",      "static",   "abstract", "final",    "native",
      "synchronized", "transient", "volatile", "strictfp", "default",  "sealed"};
  return std::find(kModifiers.begin(), kModifiers.end(), w) != kModifiers.end();
}

}  // namespace seqmatch::java
