#pragma once

// On-disk method store plus the name index used by the fuzzy search rounds.
//
// Directory layout (see docs/formats.md):
//   methods.jsonl   one MethodRecord per line, build order
//   names.idx       record offsets and lowercase names
//   postings.bin    3-gram -> record ordinals (optional)
//   frequency.tsv   stemmed name-word counts
//   meta.json       format_version and counts

#include <array>
#include <cstdint>
#include <fstream>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqmatch/corpus.hpp"
#include "seqmatch/extractor.hpp"
#include "seqmatch/lexicons.hpp"

namespace seqmatch {

namespace fs = std::filesystem;

inline constexpr int kIndexFormatVersion = 1;

struct MatchPattern {
  std::vector<std::string> words;

  friend bool operator==(const MatchPattern&, const MatchPattern&) = default;
};

// Words occur in `name_lower` in order, without overlapping. Greedy leftmost
// scan; an empty word list matches everything.
bool ordered_match(std::string_view name_lower, std::span<const std::string> words) noexcept;
inline bool ordered_match(std::string_view name_lower, const MatchPattern& pattern) noexcept {
  return ordered_match(name_lower, pattern.words);
}

// Packs the three bytes of a trigram into an integer key.
inline std::uint32_t trigram_key(std::string_view s, std::size_t at) noexcept {
  return (std::uint32_t{static_cast<unsigned char>(s[at])} << 16) |
         (std::uint32_t{static_cast<unsigned char>(s[at + 1])} << 8) |
         std::uint32_t{static_cast<unsigned char>(s[at + 2])};
}

class NameIndex {
 public:
  NameIndex() = default;

  // Throws DataError on missing files, unknown format_version or inconsistent counts.
  static NameIndex load(const fs::path& dir);
  // Builds the same structures in memory (tests, benchmarks).
  static NameIndex in_memory(std::vector<MethodRecord> records, bool with_postings = true);

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const MethodRecord& record(std::uint32_t ordinal) const { return records_[ordinal]; }
  std::span<const MethodRecord> records() const { return records_; }
  std::string_view name_lower(std::uint32_t ordinal) const { return names_[ordinal]; }
  bool has_postings() const { return !postings_.empty(); }
  const FrequencyTable& frequencies() const { return frequencies_; }

  // Ordinals whose name satisfies ordered_match, ascending. Uses the trigram
  // postings as a lossless prefilter when available.
  std::vector<std::uint32_t> search_names(const MatchPattern& pattern) const;
  std::vector<std::uint32_t> full_scan(const MatchPattern& pattern) const;

 private:
  void build_postings();

  std::vector<MethodRecord> records_;
  std::vector<std::string> names_;
  std::map<std::uint32_t, std::vector<std::uint32_t>> postings_;
  FrequencyTable frequencies_;
};

// Writes an index directory. Files are staged in a hidden subdirectory and moved
// into place by commit(); an uncommitted writer removes its staging area. A
// lock file (flock) keeps two builds from writing the same directory.
class IndexWriter {
 public:
  explicit IndexWriter(const fs::path& out_dir, bool with_postings = true);
  ~IndexWriter();
  IndexWriter(const IndexWriter&) = delete;
  IndexWriter& operator=(const IndexWriter&) = delete;

  // Throws DataError naming the key when it was already added.
  void add(const MethodRecord& record);
  void commit();

  std::size_t size() const { return names_.size(); }
  const FrequencyTable& frequencies() const { return frequencies_; }

 private:
  struct Impl;
  void cleanup() noexcept;

  fs::path out_dir_;
  fs::path staging_;
  bool with_postings_;
  bool committed_ = false;
  int lock_fd_ = -1;
  std::unique_ptr<std::ofstream> methods_;
  std::uint64_t offset_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> spans_;  // byte offset, line length
  std::vector<std::string> names_;
  std::set<std::string, std::less<>> keys_;
  FrequencyTable frequencies_;
};

struct BuildSummary {
  IngestStats ingest;
  std::uint64_t methods = 0;
  std::uint64_t extraction_diagnostics = 0;
  std::uint64_t vocabulary = 0;
  double elapsed_seconds = 0.0;
};

// discover -> stream -> extract -> write, in deterministic order.
BuildSummary build_index(const IngestConfig& config, const fs::path& out_dir, const JdkCatalog& catalog,
                         bool with_postings = true);

struct IndexStats {
  std::uint64_t records = 0;
  std::uint64_t vocabulary = 0;
  std::uint64_t name_words = 0;
  std::uint64_t empty_api_sequences = 0;
  double mean_jdk_ratio = 0.0;
  // jdk_ratio histogram over [0,0.1), ..., [0.9,1.0]; methods without APIs excluded.
  std::array<std::uint64_t, 10> jdk_ratio_histogram{};
};

IndexStats compute_stats(const NameIndex& index);

}  // namespace seqmatch
