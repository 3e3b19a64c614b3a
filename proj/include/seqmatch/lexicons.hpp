#pragma once

// Word-level knowledge shared by indexing and querying: identifier splitting,
// part-of-speech classification, importance levels, corpus word frequencies,
// synonym substitution, stemming and the JDK class catalog.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace seqmatch {

namespace fs = std::filesystem;

enum class WordProperty { Verb, Noun, Adjective, Adverb, Preposition, Conjunction, Other };

inline constexpr WordProperty kAllProperties[] = {
    WordProperty::Verb,        WordProperty::Noun,        WordProperty::Adjective, WordProperty::Adverb,
    WordProperty::Preposition, WordProperty::Conjunction, WordProperty::Other};

std::string_view to_string(WordProperty property) noexcept;
std::optional<WordProperty> parse_property(std::string_view text) noexcept;

// camelCase / snake_case / digit-run splitting, lowercased. Runs of capitals
// stay together until a capital followed by a lowercase letter starts a word:
// "parseHTTPResponse" -> parse, http, response.
std::vector<std::string> split_identifier(std::string_view name);

// Porter (1980) suffix stripping on a lowercase ASCII word.
std::string stem(std::string_view word);

class PosLexicon {
 public:
  PosLexicon() = default;
  // word<TAB>property per line; '#' starts a comment line.
  static PosLexicon load(const fs::path& path);
  static PosLexicon from_entries(std::span<const std::pair<std::string, WordProperty>> entries);

  std::optional<WordProperty> lookup(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_map<std::string, WordProperty> words_;
};

// Lexicon lookup first, then suffix heuristics; defaults to Noun.
WordProperty classify_word(std::string_view raw, const PosLexicon& lexicon);

// JDK noun -> 5; verb or other noun -> 4; adjective/adverb -> 3;
// preposition/conjunction -> 2; everything else -> 1.
int importance_level(WordProperty property, bool is_jdk_noun) noexcept;

class FrequencyTable {
 public:
  void add(std::string_view word, std::uint64_t count = 1);
  std::uint64_t count(std::string_view word) const;
  std::uint64_t total() const { return total_; }
  std::size_t vocabulary_size() const { return counts_.size(); }
  const std::map<std::string, std::uint64_t, std::less<>>& entries() const { return counts_; }

  // Adds the stemmed split words of one method name.
  void add_name(std::string_view method_name);

  // word<TAB>count per line, sorted by word.
  void save(const fs::path& path) const;
  static FrequencyTable load(const fs::path& path);

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t total_ = 0;
};

class SynonymTable {
 public:
  SynonymTable() = default;
  // word<TAB>syn1,syn2,... per line.
  static SynonymTable load(const fs::path& path);
  void add(std::string word, std::vector<std::string> synonyms);

  std::span<const std::string> lookup(std::string_view word) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> table_;
};

// Keeps `word` if it occurs in the corpus; otherwise the most frequent known
// synonym (ties: lexicographically smallest), or `word` when none occurs.
std::string synonym_substitute(std::string_view word, const FrequencyTable& frequencies,
                               const SynonymTable& synonyms);

// Picks the candidate with the highest frequency > 0 (ties: smallest string).
std::optional<std::string> most_frequent(std::span<const std::string> candidates,
                                         const FrequencyTable& frequencies);

class JdkCatalog {
 public:
  JdkCatalog() = default;
  // One qualified name per line: "java.io.InputStream" for types,
  // "java.io.BufferedReader.readLine()" for members.
  static JdkCatalog load(const fs::path& path);
  static JdkCatalog from_lines(std::span<const std::string> lines);

  // Qualified name of `simple` inside `package`, if the catalog lists it.
  std::optional<std::string> qualify_in_package(std::string_view package, std::string_view simple) const;
  // java.lang.<simple>, if listed.
  std::optional<std::string> qualify_implicit(std::string_view simple) const;

  // `word` equals a type or member simple name (case-insensitive), or splits
  // completely into type simple names ("stringbuilder", "inputstreamreader").
  bool is_jdk_noun(std::string_view word) const;
  // `word` equals a type simple name, case-insensitively.
  bool is_type_name(std::string_view word) const;

  std::size_t size() const { return qualified_.size(); }
  bool empty() const { return qualified_.empty(); }

 private:
  void insert(std::string_view qualified);

  std::unordered_set<std::string> qualified_;          // types only
  std::unordered_set<std::string> lower_type_names_;   // "inputstream"
  std::unordered_set<std::string> lower_member_names_; // "readline"
  std::size_t longest_type_name_ = 0;
};

bool is_jdk_qualified(std::string_view qualified) noexcept;

struct LexiconPaths {
  fs::path pos_lexicon;
  fs::path synonyms;
  fs::path jdk_catalog;

  // Files under `data_dir` with their standard names.
  static LexiconPaths in_directory(const fs::path& data_dir);
  // SEQMATCH_DATA if set, otherwise the data directory baked in at build time.
  static fs::path default_data_dir();
};

struct Lexicons {
  PosLexicon pos;
  SynonymTable synonyms;
  JdkCatalog jdk;
  FrequencyTable frequency;

  static Lexicons load(const LexiconPaths& paths, FrequencyTable frequency = {});
};

}  // namespace seqmatch
