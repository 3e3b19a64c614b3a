#include "seqmatch/lexicons.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <spdlog/spdlog.h>

#include "seqmatch/error.hpp"
#include "seqmatch/kernels.hpp"

namespace seqmatch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename Fn>
void for_each_line(const fs::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon file " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    fn(view, number);
  }
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// A suffix rule needs at least two letters of stem in front of it.
bool has_suffix(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() + 2 && ends_with(word, suffix);
}

constexpr std::string_view kPrepositions[] = {
    "about", "above", "across", "after", "against", "along", "among", "around", "as", "at",
    "before", "behind", "below", "beneath", "beside", "between", "beyond", "by", "despite", "down",
    "during", "except", "for", "from", "in", "inside", "into", "like", "near", "of", "off", "on",
    "onto", "out", "outside", "over", "past", "per", "since", "through", "throughout", "till", "to",
    "toward", "towards", "under", "underneath", "until", "up", "upon", "via", "with", "within",
    "without"};
constexpr std::string_view kConjunctions[] = {"and", "or", "but", "nor", "so", "yet", "if", "because",
                                              "although", "though", "while", "whereas", "unless",
                                              "whether", "than", "either", "neither"};

template <std::size_t N>
bool contains(const std::string_view (&list)[N], std::string_view word) {
  return std::find(std::begin(list), std::end(list), word) != std::end(list);
}

}  // namespace

std::string_view to_string(WordProperty property) noexcept {
  switch (property) {
    case WordProperty::Verb: return "verb";
    case WordProperty::Noun: return "noun";
    case WordProperty::Adjective: return "adjective";
    case WordProperty::Adverb: return "adverb";
    case WordProperty::Preposition: return "preposition";
    case WordProperty::Conjunction: return "conjunction";
    case WordProperty::Other: break;
  }
  return "other";
}

std::optional<WordProperty> parse_property(std::string_view text) noexcept {
  for (WordProperty p : kAllProperties)
    if (to_string(p) == text) return p;
  return std::nullopt;
}

PosLexicon PosLexicon::load(const fs::path& path) {
  PosLexicon lexicon;
  for_each_line(path, [&](std::string_view line, std::size_t number) {
    const auto tab = line.find('\t');
    const auto property = tab == std::string_view::npos ? std::nullopt : parse_property(trim(line.substr(tab + 1)));
    if (!property) {
      throw DataError(path.string() + ":" + std::to_string(number) + ": expected word<TAB>property");
    }
    lexicon.words_[kernels::lowered(trim(line.substr(0, tab)))] = *property;
  });
  return lexicon;
}

PosLexicon PosLexicon::from_entries(std::span<const std::pair<std::string, WordProperty>> entries) {
  PosLexicon lexicon;
  for (const auto& [word, property] : entries) lexicon.words_[word] = property;
  return lexicon;
}

std::optional<WordProperty> PosLexicon::lookup(std::string_view word) const {
  if (auto it = words_.find(std::string(word)); it != words_.end()) return it->second;
  return std::nullopt;
}

WordProperty classify_word(std::string_view raw, const PosLexicon& lexicon) {
  const bool has_letter = std::any_of(raw.begin(), raw.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
  if (!has_letter) return WordProperty::Other;
  if (auto hit = lexicon.lookup(raw)) return *hit;
  if (contains(kPrepositions, raw)) return WordProperty::Preposition;
  if (contains(kConjunctions, raw)) return WordProperty::Conjunction;
  if (has_suffix(raw, "ly")) return WordProperty::Adverb;
  if (has_suffix(raw, "ing") || has_suffix(raw, "ize") || has_suffix(raw, "ify")) return WordProperty::Verb;
  if (has_suffix(raw, "ous") || has_suffix(raw, "ful") || has_suffix(raw, "ive") || has_suffix(raw, "al"))
    return WordProperty::Adjective;
  return WordProperty::Noun;
}

int importance_level(WordProperty property, bool is_jdk_noun) noexcept {
  switch (property) {
    case WordProperty::Noun: return is_jdk_noun ? 5 : 4;
    case WordProperty::Verb: return 4;
    case WordProperty::Adjective:
    case WordProperty::Adverb: return 3;
    case WordProperty::Preposition:
    case WordProperty::Conjunction: return 2;
    case WordProperty::Other: break;
  }
  return 1;
}

void FrequencyTable::add(std::string_view word, std::uint64_t count) {
  if (count == 0) return;
  auto it = counts_.find(word);
  if (it == counts_.end()) it = counts_.emplace(std::string(word), 0).first;
  it->second += count;
  total_ += count;
}

std::uint64_t FrequencyTable::count(std::string_view word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

void FrequencyTable::add_name(std::string_view method_name) {
  for (const auto& word : split_identifier(method_name)) add(stem(word));
}

void FrequencyTable::save(const fs::path& path) const {
  std::ofstream out(path, std::ios::binary);
  for (const auto& [word, count] : counts_) out << word << '\t' << count << '\n';
  if (!out) throw DataError("failed writing " + path.string());
}

FrequencyTable FrequencyTable::load(const fs::path& path) {
  FrequencyTable table;
  for_each_line(path, [&](std::string_view line, std::size_t number) {
    const auto tab = line.find('\t');
    char* end = nullptr;
    const std::string digits(tab == std::string_view::npos ? std::string_view{} : trim(line.substr(tab + 1)));
    const unsigned long long count = std::strtoull(digits.c_str(), &end, 10);
    if (tab == std::string_view::npos || digits.empty() || *end != '\0') {
      throw DataError(path.string() + ":" + std::to_string(number) + ": expected word<TAB>count");
    }
    table.add(line.substr(0, tab), count);
  });
  return table;
}

SynonymTable SynonymTable::load(const fs::path& path) {
  SynonymTable table;
  for_each_line(path, [&](std::string_view line, std::size_t number) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw DataError(path.string() + ":" + std::to_string(number) + ": expected word<TAB>synonyms");
    }
    std::vector<std::string> synonyms;
    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = trim(rest.substr(0, comma));
      if (!item.empty()) synonyms.push_back(kernels::lowered(item));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    table.add(kernels::lowered(trim(line.substr(0, tab))), std::move(synonyms));
  });
  return table;
}

void SynonymTable::add(std::string word, std::vector<std::string> synonyms) {
  auto& slot = table_[std::move(word)];
  slot.insert(slot.end(), std::make_move_iterator(synonyms.begin()), std::make_move_iterator(synonyms.end()));
}

std::span<const std::string> SynonymTable::lookup(std::string_view word) const {
  if (auto it = table_.find(std::string(word)); it != table_.end()) return it->second;
  return {};
}

std::optional<std::string> most_frequent(std::span<const std::string> candidates,
                                         const FrequencyTable& frequencies) {
  const std::string* best = nullptr;
  std::uint64_t best_count = 0;
  for (const auto& candidate : candidates) {
    const std::uint64_t count = frequencies.count(candidate);
    if (count == 0) continue;
    if (!best || count > best_count || (count == best_count && candidate < *best)) {
      best = &candidate;
      best_count = count;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

std::string synonym_substitute(std::string_view word, const FrequencyTable& frequencies,
                               const SynonymTable& synonyms) {
  if (frequencies.count(word) > 0) return std::string(word);
  if (auto best = most_frequent(synonyms.lookup(word), frequencies)) return *best;
  return std::string(word);
}

bool is_jdk_qualified(std::string_view qualified) noexcept {
  return qualified.starts_with("java.") || qualified.starts_with("javax.");
}

void JdkCatalog::insert(std::string_view qualified) {
  if (qualified.ends_with("()")) {
    const auto body = qualified.substr(0, qualified.size() - 2);
    const auto dot = body.rfind('.');
    lower_member_names_.insert(kernels::lowered(body.substr(dot == std::string_view::npos ? 0 : dot + 1)));
    return;
  }
  const auto dot = qualified.rfind('.');
  const auto simple = qualified.substr(dot == std::string_view::npos ? 0 : dot + 1);
  qualified_.emplace(qualified);
  lower_type_names_.insert(kernels::lowered(simple));
  longest_type_name_ = std::max(longest_type_name_, simple.size());
}

JdkCatalog JdkCatalog::load(const fs::path& path) {
  JdkCatalog catalog;
  for_each_line(path, [&](std::string_view line, std::size_t number) {
    if (!is_jdk_qualified(line)) {
      throw DataError(path.string() + ":" + std::to_string(number) + ": not a java./javax. name");
    }
    catalog.insert(line);
  });
  if (catalog.empty()) throw DataError("JDK catalog is empty: " + path.string());
  return catalog;
}

JdkCatalog JdkCatalog::from_lines(std::span<const std::string> lines) {
  JdkCatalog catalog;
  for (const auto& line : lines)
    if (is_jdk_qualified(line)) catalog.insert(line);
  return catalog;
}

std::optional<std::string> JdkCatalog::qualify_in_package(std::string_view package,
                                                          std::string_view simple) const {
  // Nested names ("Map.Entry") resolve through their outermost type.
  const auto outer = simple.substr(0, simple.find('.'));
  std::string candidate = std::string(package) + "." + std::string(outer);
  if (!qualified_.contains(candidate)) return std::nullopt;
  return std::string(package) + "." + std::string(simple);
}

std::optional<std::string> JdkCatalog::qualify_implicit(std::string_view simple) const {
  return qualify_in_package("java.lang", simple);
}

bool JdkCatalog::is_jdk_noun(std::string_view word) const {
  if (word.empty()) return false;
  const std::string lower = kernels::lowered(word);
  if (lower_type_names_.contains(lower) || lower_member_names_.contains(lower)) return true;
  // Word break into catalog type names.
  const std::size_t n = lower.size();
  std::vector<bool> reachable(n + 1, false);
  reachable[0] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!reachable[i]) continue;
    for (std::size_t len = 1; len <= longest_type_name_ && i + len <= n; ++len) {
      if (lower_type_names_.contains(lower.substr(i, len))) reachable[i + len] = true;
    }
  }
  return reachable[n];
}

bool JdkCatalog::is_type_name(std::string_view word) const {
  return lower_type_names_.contains(kernels::lowered(word));
}

LexiconPaths LexiconPaths::in_directory(const fs::path& data_dir) {
  return {data_dir / "pos_lexicon.tsv", data_dir / "synonyms.tsv", data_dir / "jdk_catalog.txt"};
}

fs::path LexiconPaths::default_data_dir() {
  if (const char* env = std::getenv("SEQMATCH_DATA"); env && *env) return env;
#ifdef SEQMATCH_DEFAULT_DATA_DIR
  return SEQMATCH_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

Lexicons Lexicons::load(const LexiconPaths& paths, FrequencyTable frequency) {
  Lexicons lexicons;
  lexicons.pos = PosLexicon::load(paths.pos_lexicon);
  lexicons.synonyms = SynonymTable::load(paths.synonyms);
  lexicons.jdk = JdkCatalog::load(paths.jdk_catalog);
  lexicons.frequency = std::move(frequency);
  spdlog::debug("lexicons: {} pos entries, {} synonym entries, {} JDK types", lexicons.pos.size(),
                lexicons.synonyms.size(), lexicons.jdk.size());
  return lexicons;
}

}  // namespace seqmatch
