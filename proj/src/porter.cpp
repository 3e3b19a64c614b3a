#include <array>
#include <string>
#include <string_view>

#include "seqmatch/lexicons.hpp"

namespace seqmatch {

namespace {

// Works on `w[0..end)`; `stem_end` marks where the suffix under test starts.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word) : w_(word) {}

  std::string run() {
    if (w_.size() <= 2) return w_;
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return w_;
  }

 private:
  bool consonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': return false;
      case 'y': return i == 0 || !consonant(i - 1);
      default: return true;
    }
  }

  // Number of VC sequences in w_[0..len).
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && consonant(i)) ++i;
    while (i < len) {
      while (i < len && !consonant(i)) ++i;
      if (i >= len) break;
      while (i < len && consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (!consonant(i)) return true;
    return false;
  }

  bool double_consonant(std::size_t len) const {
    return len >= 2 && w_[len - 1] == w_[len - 2] && consonant(len - 1);
  }

  // cvc where the final c is not w, x or y.
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) return false;
    const char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suffix) const {
    return w_.size() >= suffix.size() && std::string_view(w_).substr(w_.size() - suffix.size()) == suffix;
  }

  std::size_t stem_len(std::string_view suffix) const { return w_.size() - suffix.size(); }

  void replace(std::string_view suffix, std::string_view with) {
    w_.resize(stem_len(suffix));
    w_.append(with);
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  // Longest matching suffix wins; it is replaced only if m(stem) > min_measure.
  template <std::size_t N>
  void apply_longest(const std::array<Rule, N>& rules, int min_measure) {
    const Rule* best = nullptr;
    for (const Rule& r : rules)
      if (ends(r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
    if (best && measure(stem_len(best->suffix)) > min_measure) replace(best->suffix, best->replacement);
  }

  void step1a() {
    if (ends("sses")) replace("sses", "ss");
    else if (ends("ies")) replace("ies", "i");
    else if (ends("ss")) return;
    else if (ends("s")) replace("s", "");
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_len("eed")) > 0) replace("eed", "ee");
      return;
    }
    bool stripped = false;
    if (ends("ed") && has_vowel(stem_len("ed"))) {
      replace("ed", "");
      stripped = true;
    } else if (ends("ing") && has_vowel(stem_len("ing"))) {
      replace("ing", "");
      stripped = true;
    }
    if (!stripped) return;
    if (ends("at")) replace("at", "ate");
    else if (ends("bl")) replace("bl", "ble");
    else if (ends("iz")) replace("iz", "ize");
    else if (double_consonant(w_.size())) {
      const char c = w_.back();
      if (c != 'l' && c != 's' && c != 'z') w_.pop_back();
    } else if (measure(w_.size()) == 1 && cvc(w_.size())) {
      w_.push_back('e');
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_len("y"))) w_.back() = 'i';
  }

  void step2() {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply_longest(rules, 0);
  }

  void step3() {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_longest(rules, 0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> suffixes{
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize"};
    std::string_view best;
    for (auto s : suffixes)
      if (ends(s) && s.size() > best.size()) best = s;
    if (best.empty()) return;
    const std::size_t len = stem_len(best);
    if (measure(len) <= 1) return;
    if (best == "ion" && !(len > 0 && (w_[len - 1] == 's' || w_[len - 1] == 't'))) return;
    w_.resize(len);
  }

  void step5() {
    if (ends("e")) {
      const std::size_t len = stem_len("e");
      const int m = measure(len);
      if (m > 1 || (m == 1 && !cvc(len))) w_.pop_back();
    }
    if (measure(w_.size()) > 1 && double_consonant(w_.size()) && w_.back() == 'l') w_.pop_back();
  }

  std::string w_;
};

}  // namespace

std::string stem(std::string_view word) { return PorterStemmer(word).run(); }

}  // namespace seqmatch
