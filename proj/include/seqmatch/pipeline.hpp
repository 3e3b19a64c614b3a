#pragma once

// Query understanding, iterative name search and reranking.

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqmatch/index.hpp"
#include "seqmatch/lexicons.hpp"

namespace seqmatch {

enum class RerankMode { Full, NoSbody, NoRerank };

std::string_view to_string(RerankMode mode) noexcept;
// "full", "no_sbody", "no_rerank"
std::optional<RerankMode> parse_mode(std::string_view text) noexcept;

struct TokenMetadata {
  std::string token;  // stemmed (possibly a substituted synonym)
  std::string raw;    // as typed, lowercase
  WordProperty property = WordProperty::Other;
  std::uint64_t frequency = 0;
  int importance = 1;
  std::size_t position = 0;  // index into base_words

  friend bool operator==(const TokenMetadata&, const TokenMetadata&) = default;
};

struct QueryPlan {
  std::string raw_query;
  std::vector<std::string> base_words;  // Nq = base_words.size()
  std::vector<TokenMetadata> kept_words;
  std::vector<MatchPattern> patterns;   // drop schedule, longest first

  std::size_t nq() const { return base_words.size(); }
  std::vector<std::string> kept_tokens() const;
};

// Lowercase words split on whitespace and ASCII punctuation.
std::vector<std::string> tokenize_query(std::string_view raw);
// Removes question words, auxiliaries and the "in java" style phrases.
std::vector<std::string> strip_query_noise(std::span<const std::string> words);

// Throws UsageError("no searchable words") when nothing survives filtering.
// Frequencies come from lexicons.frequency.
QueryPlan understand_query(std::string_view raw, const Lexicons& lexicons);

// patterns[0] = all kept tokens; each next pattern drops the word with the
// smallest (importance, frequency), the rightmost one on ties; ends at one word.
std::vector<MatchPattern> drop_schedule(std::span<const TokenMetadata> kept);

struct NameAlignment {
  std::size_t words = 0;  // m
  std::size_t chars = 0;  // c

  friend bool operator==(const NameAlignment&, const NameAlignment&) = default;
  friend auto operator<=>(const NameAlignment&, const NameAlignment&) = default;
};

// In-order, non-overlapping substring alignment of `words` in `name_lower`
// maximizing matched words, then matched characters.
NameAlignment best_name_alignment(std::span<const std::string> words, std::string_view name_lower);

// (m / Nq) * (c / |name|)
double score_name(const QueryPlan& plan, const MethodRecord& record);

struct BodyTerms {
  std::size_t matched_words = 0;  // kept-word positions matching some API token
  std::size_t lcs = 0;
  std::size_t jdk_apis = 0;
  std::size_t apis = 0;
};
BodyTerms body_terms(std::span<const std::string> words, std::span<const ApiToken> apis);
// (matched / Nq) * (lcs / Nq) * (jdk / apis)
double score_body(const QueryPlan& plan, const MethodRecord& record);

struct Candidate {
  std::uint32_t ordinal = 0;
  int round = 0;  // 1-based pattern that first found it

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Runs the drop schedule, accumulating distinct (by content_hash) matches until
// the pool holds more than pool_min methods or the schedule runs out.
std::vector<Candidate> iterative_search(const QueryPlan& plan, const NameIndex& index, std::size_t pool_min = 10);

struct ScoredResult {
  std::string method_key;
  std::uint32_t ordinal = 0;
  double s_name = 0.0;
  double s_body = 0.0;
  int round = 0;
  int rank = 0;
};

// Scores and orders candidates per mode, truncated to k (k = 0 keeps all).
std::vector<ScoredResult> rerank(std::span<const Candidate> candidates, const QueryPlan& plan,
                                 const NameIndex& index, RerankMode mode, std::size_t k = 10);

struct SearchOptions {
  std::size_t k = 10;
  std::size_t pool_min = 10;
  RerankMode mode = RerankMode::Full;
};

struct SearchResponse {
  QueryPlan plan;
  std::vector<ScoredResult> results;
  std::size_t pool_size = 0;
  std::chrono::nanoseconds elapsed{0};
};

// One loaded index plus lexicons; search() is const and safe to call from many threads.
class SearchEngine {
 public:
  SearchEngine(std::shared_ptr<const NameIndex> index, Lexicons lexicons);
  // Loads the index directory and the lexicons from `data_dir`.
  static SearchEngine open(const fs::path& index_dir, const fs::path& data_dir);

  SearchResponse search(std::string_view query, const SearchOptions& options) const;
  const NameIndex& index() const { return *index_; }
  const Lexicons& lexicons() const { return lexicons_; }

 private:
  std::shared_ptr<const NameIndex> index_;
  Lexicons lexicons_;
};

// Result document shared by the CLI and the HTTP endpoint (trailing newline included).
std::string render_json(const SearchResponse& response, const NameIndex& index);
std::string snippet_of(std::string_view body_text, std::size_t max_lines = 10);

}  // namespace seqmatch
