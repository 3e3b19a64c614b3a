#include <string>
#include <string_view>
#include <vector>

#include "seqmatch/lexicons.hpp"

namespace seqmatch {

namespace {

enum class CharClass { Upper, Lower, Digit, Separator };

CharClass classify(char c) {
  if (c >= 'A' && c <= 'Z') return CharClass::Upper;
  if (c >= '0' && c <= '9') return CharClass::Digit;
  if ((c >= 'a' && c <= 'z') || static_cast<unsigned char>(c) >= 0x80) return CharClass::Lower;
  return CharClass::Separator;  // '_', '$' and punctuation
}

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

std::vector<std::string> split_identifier(std::string_view name) {
  std::vector<std::string> words;
  std::string current;
  CharClass prev = CharClass::Separator;
  std::size_t upper_run = 0;  // trailing capitals in `current`

  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
    upper_run = 0;
  };

  for (char c : name) {
    const CharClass cls = classify(c);
    switch (cls) {
      case CharClass::Separator:
        flush();
        break;
      case CharClass::Digit:
        if (prev != CharClass::Digit) flush();
        current.push_back(c);
        break;
      case CharClass::Upper:
        if (prev == CharClass::Lower || prev == CharClass::Digit) flush();
        current.push_back(lower(c));
        ++upper_run;
        break;
      case CharClass::Lower:
        if (prev == CharClass::Digit) {
          flush();
        } else if (prev == CharClass::Upper && upper_run >= 2) {
          // "HTTPResponse": the last capital belongs to the next word.
          const char carried = current.back();
          current.pop_back();
          flush();
          current.push_back(carried);
        }
        current.push_back(c);
        upper_run = 0;
        break;
    }
    prev = cls;
  }
  flush();
  return words;
}

}  // namespace seqmatch
