#include "seqmatch/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>
#include <system_error>

#include "seqmatch/error.hpp"

namespace seqmatch {

namespace {

bool is_java(const fs::path& p) { return p.extension() == ".java"; }

bool is_hidden(const fs::path& p) {
  const std::string name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

std::vector<fs::directory_entry> sorted_entries(const fs::path& dir, std::error_code& ec) {
  std::vector<fs::directory_entry> entries;
  fs::directory_iterator it(dir, ec);
  if (ec) return entries;
  for (const fs::directory_iterator end; it != end; it.increment(ec)) {
    if (ec) break;
    entries.push_back(*it);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.path().filename() < b.path().filename(); });
  return entries;
}

bool excluded(const std::string& rel_path, const std::vector<std::string>& patterns) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const std::string& pattern) {
    return ::fnmatch(pattern.c_str(), rel_path.c_str(), 0) == 0;
  });
}

void walk(const RepoSpec& repo, const fs::path& dir, const IngestConfig& config, IngestStats& stats,
          const SourceSink& sink) {
  std::error_code ec;
  auto entries = sorted_entries(dir, ec);
  if (ec) {
    spdlog::warn("cannot list {}: {}", dir.string(), ec.message());
    return;
  }
  for (const auto& entry : entries) {
    std::error_code type_ec;
    if (entry.is_directory(type_ec)) {
      if (!is_hidden(entry.path())) walk(repo, entry.path(), config, stats, sink);
      continue;
    }
    if (!entry.is_regular_file(type_ec) || !is_java(entry.path())) continue;

    ++stats.java_files_seen;
    const std::string rel = entry.path().lexically_relative(repo.root_path).generic_string();
    if (excluded(rel, config.exclude)) {
      ++stats.skipped_excluded;
      continue;
    }
    std::error_code size_ec;
    const std::uintmax_t size = entry.file_size(size_ec);
    if (size_ec) {
      spdlog::warn("skipping unreadable file {}: {}", entry.path().string(), size_ec.message());
      ++stats.skipped_unreadable;
      continue;
    }
    if (size > config.max_file_bytes) {
      spdlog::warn("skipping {} ({} bytes > max_file_bytes {})", entry.path().string(), size,
                   config.max_file_bytes);
      ++stats.skipped_oversize;
      continue;
    }
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) {
      spdlog::warn("skipping unreadable file {}", entry.path().string());
      ++stats.skipped_unreadable;
      continue;
    }
    std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
      spdlog::warn("skipping {}: read error", entry.path().string());
      ++stats.skipped_unreadable;
      continue;
    }
    ++stats.files_yielded;
    stats.bytes_read += bytes.size();
    SourceFile file{repo.repo_id, rel, decode_utf8_lossy(bytes), bytes.size()};
    sink(std::move(file));
  }
}

}  // namespace

IngestStats& IngestStats::operator+=(const IngestStats& other) {
  repos += other.repos;
  java_files_seen += other.java_files_seen;
  files_yielded += other.files_yielded;
  skipped_oversize += other.skipped_oversize;
  skipped_unreadable += other.skipped_unreadable;
  skipped_excluded += other.skipped_excluded;
  bytes_read += other.bytes_read;
  return *this;
}

IngestConfig IngestConfig::load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read config file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("invalid JSON in " + path.string() + ": " + e.what());
  }
  IngestConfig config;
  const fs::path base = path.parent_path();
  try {
    for (const auto& root : doc.value("roots", std::vector<std::string>{})) {
      fs::path p(root);
      config.roots.push_back(p.is_relative() ? base / p : p);
    }
    config.max_file_bytes = doc.value("max_file_bytes", config.max_file_bytes);
    config.exclude = doc.value("exclude", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad config value in " + path.string() + ": " + e.what());
  }
  return config;
}

std::vector<RepoSpec> discover_repos(std::span<const fs::path> roots) {
  std::vector<RepoSpec> repos;
  for (const auto& root : roots) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
      throw DataError("corpus root is not a readable directory: " + root.string());
    }
    auto entries = sorted_entries(root, ec);
    if (ec) throw DataError("cannot read corpus root " + root.string() + ": " + ec.message());

    const bool has_java = std::any_of(entries.begin(), entries.end(), [](const auto& e) {
      std::error_code type_ec;
      return e.is_regular_file(type_ec) && is_java(e.path());
    });
    if (has_java) {
      std::string id = fs::weakly_canonical(root, ec).filename().string();
      if (id.empty()) id = root.string();
      repos.push_back({id, root});
      continue;
    }
    for (const auto& entry : entries) {
      std::error_code type_ec;
      if (entry.is_directory(type_ec) && !is_hidden(entry.path())) {
        repos.push_back({entry.path().filename().string(), entry.path()});
      }
    }
  }
  return repos;
}

void stream_sources(const RepoSpec& repo, const IngestConfig& config, IngestStats& stats,
                    const SourceSink& sink) {
  ++stats.repos;
  walk(repo, repo.root_path, config, stats, sink);
}

std::vector<SourceFile> collect_sources(const RepoSpec& repo, const IngestConfig& config,
                                        IngestStats& stats) {
  std::vector<SourceFile> files;
  stream_sources(repo, config, stats, [&](SourceFile&& f) { files.push_back(std::move(f)); });
  return files;
}

std::string decode_utf8_lossy(std::string_view bytes) {
  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(bytes.size());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = p[i];
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    std::size_t len = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    if (c >= 0xC2 && c <= 0xDF) len = 2;
    else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      if (c == 0xE0) lo = 0xA0;
      if (c == 0xED) hi = 0x9F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      if (c == 0xF0) lo = 0x90;
      if (c == 0xF4) hi = 0x8F;
    }
    bool valid = len != 0 && i + len <= n;
    for (std::size_t j = 1; valid && j < len; ++j) {
      const unsigned char cc = p[i + j];
      const unsigned char min = j == 1 ? lo : 0x80;
      const unsigned char max = j == 1 ? hi : 0xBF;
      valid = cc >= min && cc <= max;
    }
    if (valid) {
      out.append(bytes.substr(i, len));
      i += len;
    } else {
      out.append(kReplacement);
      ++i;
    }
  }
  return out;
}

}  // namespace seqmatch
