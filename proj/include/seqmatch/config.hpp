#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "seqmatch/pipeline.hpp"

namespace seqmatch {

namespace fs = std::filesystem;

struct AppConfig {
  fs::path index_dir;  // defaults to $SEQMATCH_INDEX, then ./seqmatch-index
  fs::path data_dir;   // lexicon directory
  std::size_t k = 10;
  std::size_t pool_min = 10;
  RerankMode mode = RerankMode::Full;
  std::string host = "127.0.0.1";
  std::uint16_t port = 8080;

  static AppConfig defaults();
  // JSON object with any of: index_dir, data_dir, k, pool_min, mode, host, port.
  // Unknown keys are rejected. Relative paths resolve against the file's directory.
  void merge_file(const fs::path& path);
  // Throws UsageError when k or pool_min is 0.
  void validate() const;
  SearchOptions search_options() const { return {k, pool_min, mode}; }
};

}  // namespace seqmatch
