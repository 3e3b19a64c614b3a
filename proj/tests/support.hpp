#pragma once

// Shared helpers for the unit and acceptance tests: scratch directories, a
// seeded RNG with small generators, and lexicon loading.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include "seqmatch/extractor.hpp"
#include "seqmatch/lexicons.hpp"

namespace testing_support {

namespace fs = std::filesystem;

inline fs::path fixtures() { return SEQMATCH_FIXTURES; }

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("seqmatch-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Small deterministic generators. Property tests print the seed on failure.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::string word(std::string_view alphabet, std::size_t min_len, std::size_t max_len) {
    std::string w(between(min_len, max_len), ' ');
    for (auto& c : w) c = alphabet[below(alphabet.size())];
    return w;
  }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<std::string>& name_vocabulary() {
  static const std::vector<std::string> words = {
      "get",    "set",    "read",  "write", "convert", "input", "stream", "to",     "string", "file",
      "list",   "map",    "sort",  "parse", "int",     "from",  "copy",   "reverse", "hash",  "md5",
      "line",   "buffer", "url",   "http",  "json",    "node",  "tree",   "add",    "remove", "count",
      "find",   "load",   "save",  "close", "open",    "byte",  "array",  "char",   "date",   "time"};
  return words;
}

// camelCase identifier from 1..max_words vocabulary words.
inline std::string random_method_name(Gen& g, std::size_t max_words = 5) {
  const std::size_t n = g.between(1, max_words);
  std::string name;
  for (std::size_t i = 0; i < n; ++i) {
    std::string w = g.pick(name_vocabulary());
    if (i > 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    name += w;
  }
  return name;
}

inline seqmatch::Lexicons shipped_lexicons(seqmatch::FrequencyTable frequency = {}) {
  return seqmatch::Lexicons::load(
      seqmatch::LexiconPaths::in_directory(seqmatch::LexiconPaths::default_data_dir()), std::move(frequency));
}

// The frequencies of the worked example's metadata row.
inline seqmatch::FrequencyTable example_frequencies() {
  seqmatch::FrequencyTable f;
  f.add("convert", 39292);
  f.add("inputstream", 3442);
  f.add("to", 22);
  f.add("string", 52369);
  return f;
}

}  // namespace testing_support
