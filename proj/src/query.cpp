#include <algorithm>
#include <array>

#include "seqmatch/error.hpp"
#include "seqmatch/pipeline.hpp"

namespace seqmatch {

namespace {

constexpr std::array<std::string_view, 7> kQuestionWords = {"how", "what", "why", "when", "where", "which", "who"};
constexpr std::array<std::string_view, 10> kAuxiliaries = {"do",    "does",   "did", "can", "could",
                                                           "should", "would", "is",  "are", "i"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool is_separator(unsigned char c) {
  if (c >= 0x80) return false;  // keep UTF-8 bytes inside words
  return !((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'));
}

}  // namespace

std::string_view to_string(RerankMode mode) noexcept {
  switch (mode) {
    case RerankMode::Full: return "full";
    case RerankMode::NoSbody: return "no_sbody";
    case RerankMode::NoRerank: return "no_rerank";
  }
  return "full";
}

std::optional<RerankMode> parse_mode(std::string_view text) noexcept {
  for (auto m : {RerankMode::Full, RerankMode::NoSbody, RerankMode::NoRerank})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

std::vector<std::string> QueryPlan::kept_tokens() const {
  std::vector<std::string> out;
  out.reserve(kept_words.size());
  for (const auto& t : kept_words) out.push_back(t.token);
  return out;
}

std::vector<std::string> tokenize_query(std::string_view raw) {
  std::vector<std::string> words;
  std::string current;
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_separator(c)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : ch);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> strip_query_noise(std::span<const std::string> words) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    if (in(kQuestionWords, w) || in(kAuxiliaries, w) || w == "java") continue;
    if ((w == "in" || w == "using") && i + 1 < words.size() && words[i + 1] == "java") {
      ++i;
      continue;
    }
    out.push_back(w);
  }
  return out;
}

std::vector<MatchPattern> drop_schedule(std::span<const TokenMetadata> kept) {
  std::vector<MatchPattern> patterns;
  std::vector<const TokenMetadata*> live;
  for (const auto& t : kept) live.push_back(&t);
  while (!live.empty()) {
    MatchPattern p;
    for (const auto* t : live) p.words.push_back(t->token);
    patterns.push_back(std::move(p));
    if (live.size() == 1) break;
    std::size_t victim = 0;
    for (std::size_t i = 1; i < live.size(); ++i) {
      const auto key = std::pair(live[i]->importance, live[i]->frequency);
      const auto best = std::pair(live[victim]->importance, live[victim]->frequency);
      if (key <= best) victim = i;  // <= : rightmost wins ties
    }
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  return patterns;
}

QueryPlan understand_query(std::string_view raw, const Lexicons& lexicons) {
  QueryPlan plan;
  plan.raw_query = std::string(raw);
  const auto words = tokenize_query(raw);
  plan.base_words = strip_query_noise(words);

  for (std::size_t pos = 0; pos < plan.base_words.size(); ++pos) {
    const std::string& word = plan.base_words[pos];
    WordProperty property = classify_word(word, lexicons.pos);
    if (lexicons.jdk.is_type_name(word)) property = WordProperty::Noun;
    if (property == WordProperty::Other) continue;
    const bool jdk_noun = property == WordProperty::Noun && lexicons.jdk.is_jdk_noun(word);

    TokenMetadata meta;
    meta.raw = word;
    meta.property = property;
    meta.position = pos;
    meta.importance = importance_level(property, jdk_noun);
    meta.token = stem(word);
    if (!jdk_noun && lexicons.frequency.count(meta.token) == 0) {
      std::vector<std::string> stems;
      for (const auto& s : lexicons.synonyms.lookup(word)) stems.push_back(stem(s));
      if (auto best = most_frequent(stems, lexicons.frequency)) meta.token = *best;
    }
    meta.frequency = lexicons.frequency.count(meta.token);
    plan.kept_words.push_back(std::move(meta));
  }
  if (plan.kept_words.empty()) throw UsageError("no searchable words");
  plan.patterns = drop_schedule(plan.kept_words);
  return plan;
}

}  // namespace seqmatch
