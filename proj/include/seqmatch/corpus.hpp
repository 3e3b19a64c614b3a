#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace seqmatch {

namespace fs = std::filesystem;

struct RepoSpec {
  std::string repo_id;
  fs::path root_path;

  friend bool operator==(const RepoSpec&, const RepoSpec&) = default;
};

struct SourceFile {
  std::string repo_id;
  std::string rel_path;  // '/'-separated, relative to the repo root
  std::string text;      // UTF-8; invalid sequences replaced by U+FFFD
  std::uintmax_t byte_len = 0;  // size on disk
};

struct IngestConfig {
  std::vector<fs::path> roots;
  std::uintmax_t max_file_bytes = std::uintmax_t{1} << 20;
  // fnmatch(3) patterns tested against the repo-relative path.
  std::vector<std::string> exclude;

  // JSON: {"roots": [...], "max_file_bytes": N, "exclude": [...]}.
  // Relative roots resolve against the config file's directory.
  static IngestConfig load(const fs::path& path);
};

struct IngestStats {
  std::uint64_t repos = 0;
  std::uint64_t java_files_seen = 0;
  std::uint64_t files_yielded = 0;
  std::uint64_t skipped_oversize = 0;
  std::uint64_t skipped_unreadable = 0;
  std::uint64_t skipped_excluded = 0;
  std::uint64_t bytes_read = 0;

  std::uint64_t skipped() const { return skipped_oversize + skipped_unreadable + skipped_excluded; }
  IngestStats& operator+=(const IngestStats& other);
};

// One repo per immediate child directory of each root, or the root itself when
// it directly holds .java files. Children are visited in lexicographic order.
// Throws DataError naming the path when a root is missing or unreadable.
std::vector<RepoSpec> discover_repos(std::span<const fs::path> roots);

using SourceSink = std::function<void(SourceFile&&)>;

// Yields every *.java below repo.root_path (recursively, lexicographic path
// order, hidden directories skipped). Oversized, excluded and unreadable files
// are skipped with a warning and counted in `stats`; nothing here aborts.
void stream_sources(const RepoSpec& repo, const IngestConfig& config, IngestStats& stats,
                    const SourceSink& sink);

std::vector<SourceFile> collect_sources(const RepoSpec& repo, const IngestConfig& config,
                                        IngestStats& stats);

std::string decode_utf8_lossy(std::string_view bytes);

}  // namespace seqmatch
