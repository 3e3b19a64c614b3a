#include "seqmatch/index.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "seqmatch/error.hpp"
#include "seqmatch/kernels.hpp"

namespace seqmatch {

namespace {

constexpr char kNamesMagic[8] = {'S', 'Q', 'M', 'N', 'A', 'M', 'E', 'S'};
constexpr char kPostingsMagic[8] = {'S', 'Q', 'M', 'P', 'O', 'S', 'T', 'S'};
constexpr const char* kFiles[] = {"methods.jsonl", "names.idx", "postings.bin", "frequency.tsv", "meta.json"};

// Explicit little-endian so the files do not depend on the host.
void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

class Reader {
 public:
  Reader(std::string data, fs::path path) : data_(std::move(data)), path_(std::move(path)) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }
  std::string_view bytes(std::size_t n) {
    need(n);
    std::string_view out(data_.data() + pos_, n);
    pos_ += n;
    return out;
  }
  bool done() const { return pos_ == data_.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw DataError(path_.string() + ": " + what);
  }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) fail("truncated file");
  }
  std::uint64_t take(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= std::uint64_t{static_cast<unsigned char>(data_[pos_ + i])} << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }

  std::string data_;
  fs::path path_;
  std::size_t pos_ = 0;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw DataError("cannot read " + path.string());
  return data;
}

void write_file(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) throw DataError("failed writing " + path.string());
}

std::map<std::uint32_t, std::vector<std::uint32_t>> make_postings(std::span<const std::string> names) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> postings;
  std::vector<std::uint32_t> grams;
  for (std::uint32_t ordinal = 0; ordinal < names.size(); ++ordinal) {
    const std::string& name = names[ordinal];
    grams.clear();
    for (std::size_t i = 0; i + 3 <= name.size(); ++i) grams.push_back(trigram_key(name, i));
    std::sort(grams.begin(), grams.end());
    grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
    for (auto g : grams) postings[g].push_back(ordinal);
  }
  return postings;
}

std::string encode_names(std::span<const std::pair<std::uint64_t, std::uint32_t>> spans,
                         std::span<const std::string> names) {
  std::string out(kNamesMagic, sizeof kNamesMagic);
  put_u32(out, kIndexFormatVersion);
  put_u32(out, 0);
  put_u64(out, names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    put_u64(out, spans[i].first);
    put_u32(out, spans[i].second);
    put_u32(out, static_cast<std::uint32_t>(names[i].size()));
    out += names[i];
  }
  return out;
}

std::string encode_postings(const std::map<std::uint32_t, std::vector<std::uint32_t>>& postings) {
  std::string out(kPostingsMagic, sizeof kPostingsMagic);
  put_u32(out, kIndexFormatVersion);
  put_u32(out, 0);
  put_u64(out, postings.size());
  for (const auto& [gram, list] : postings) {
    put_u32(out, gram);
    put_u32(out, static_cast<std::uint32_t>(list.size()));
    for (auto o : list) put_u32(out, o);
  }
  return out;
}

void check_header(Reader& r, const char (&magic)[8]) {
  if (r.bytes(8) != std::string_view(magic, 8)) r.fail("bad magic");
  if (const auto v = r.u32(); v != kIndexFormatVersion) r.fail("unsupported format_version " + std::to_string(v));
  r.u32();
}

}  // namespace

bool ordered_match(std::string_view name_lower, std::span<const std::string> words) noexcept {
  std::size_t pos = 0;
  for (const auto& w : words) {
    const std::size_t hit = kernels::find(name_lower, w, pos);
    if (hit == kernels::npos) return false;
    pos = hit + w.size();
  }
  return true;
}

// ---------------------------------------------------------------- NameIndex

NameIndex NameIndex::in_memory(std::vector<MethodRecord> records, bool with_postings) {
  NameIndex index;
  index.records_ = std::move(records);
  index.names_.reserve(index.records_.size());
  for (const auto& r : index.records_) {
    index.names_.push_back(r.name_lower);
    index.frequencies_.add_name(r.name);
  }
  if (with_postings) index.build_postings();
  return index;
}

void NameIndex::build_postings() { postings_ = make_postings(names_); }

NameIndex NameIndex::load(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DataError("index directory not found: " + dir.string());
  const fs::path meta_path = dir / "meta.json";
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(slurp(meta_path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(meta_path.string() + ": " + e.what());
  }
  const int version = meta.value("format_version", -1);
  if (version != kIndexFormatVersion)
    throw DataError(meta_path.string() + ": unsupported format_version " + std::to_string(version));
  const auto expected = meta.value("records", std::uint64_t{0});

  NameIndex index;
  {
    const fs::path path = dir / "methods.jsonl";
    const std::string data = slurp(path);
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < data.size()) {
      std::size_t end = data.find('\n', start);
      if (end == std::string::npos) end = data.size();
      ++line_no;
      try {
        index.records_.push_back(nlohmann::json::parse(data.data() + start, data.data() + end).get<MethodRecord>());
      } catch (const nlohmann::json::exception& e) {
        throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
      start = end + 1;
    }
  }
  if (index.records_.size() != expected)
    throw DataError("methods.jsonl holds " + std::to_string(index.records_.size()) + " records, meta.json says " +
                    std::to_string(expected));
  {
    Reader r(slurp(dir / "names.idx"), dir / "names.idx");
    check_header(r, kNamesMagic);
    const auto count = r.u64();
    if (count != expected) r.fail("record count mismatch");
    index.names_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      r.u64();
      r.u32();
      const auto len = r.u32();
      index.names_.emplace_back(r.bytes(len));
      if (index.names_.back() != index.records_[i].name_lower) r.fail("name table disagrees with methods.jsonl");
    }
    if (!r.done()) r.fail("trailing bytes");
  }
  if (meta.value("postings", false)) {
    Reader r(slurp(dir / "postings.bin"), dir / "postings.bin");
    check_header(r, kPostingsMagic);
    const auto grams = r.u64();
    for (std::uint64_t g = 0; g < grams; ++g) {
      const auto key = r.u32();
      const auto n = r.u32();
      auto& list = index.postings_[key];
      list.reserve(n);
      for (std::uint32_t k = 0; k < n; ++k) {
        const auto o = r.u32();
        if (o >= index.records_.size()) r.fail("posting out of range");
        list.push_back(o);
      }
    }
    if (!r.done()) r.fail("trailing bytes");
  }
  index.frequencies_ = FrequencyTable::load(dir / "frequency.tsv");
  return index;
}

std::vector<std::uint32_t> NameIndex::full_scan(const MatchPattern& pattern) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t o = 0; o < names_.size(); ++o)
    if (ordered_match(names_[o], pattern)) out.push_back(o);
  return out;
}

std::vector<std::uint32_t> NameIndex::search_names(const MatchPattern& pattern) const {
  if (postings_.empty()) return full_scan(pattern);
  std::vector<std::uint32_t> grams;
  for (const auto& w : pattern.words)
    for (std::size_t i = 0; i + 3 <= w.size(); ++i) grams.push_back(trigram_key(w, i));
  if (grams.empty()) return full_scan(pattern);
  std::sort(grams.begin(), grams.end());
  grams.erase(std::unique(grams.begin(), grams.end()), grams.end());

  std::vector<const std::vector<std::uint32_t>*> lists;
  for (auto g : grams) {
    auto it = postings_.find(g);
    if (it == postings_.end()) return {};
    lists.push_back(&it->second);
  }
  std::sort(lists.begin(), lists.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
  std::vector<std::uint32_t> candidates = *lists.front();
  std::vector<std::uint32_t> next;
  for (std::size_t i = 1; i < lists.size() && !candidates.empty(); ++i) {
    next.clear();
    std::set_intersection(candidates.begin(), candidates.end(), lists[i]->begin(), lists[i]->end(),
                          std::back_inserter(next));
    candidates.swap(next);
  }
  std::erase_if(candidates, [&](std::uint32_t o) { return !ordered_match(names_[o], pattern); });
  return candidates;
}

// -------------------------------------------------------------- IndexWriter

IndexWriter::IndexWriter(const fs::path& out_dir, bool with_postings)
    : out_dir_(out_dir), with_postings_(with_postings) {
  std::error_code ec;
  fs::create_directories(out_dir_, ec);
  if (ec) throw DataError("cannot create index directory " + out_dir_.string() + ": " + ec.message());
  const fs::path lock = out_dir_ / ".seqmatch.lock";
  lock_fd_ = ::open(lock.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
  if (lock_fd_ < 0) throw DataError("cannot open lock file " + lock.string() + ": " + std::strerror(errno));
  if (::flock(lock_fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(lock_fd_);
    lock_fd_ = -1;
    throw DataError("another build holds " + lock.string());
  }
  // leftovers of builds that died before commit
  for (const auto& entry : fs::directory_iterator(out_dir_, ec)) {
    if (entry.is_directory() && entry.path().filename().string().starts_with(".staging-")) {
      spdlog::warn("removing stale staging directory {}", entry.path().string());
      fs::remove_all(entry.path(), ec);
    }
  }
  staging_ = out_dir_ / (".staging-" + std::to_string(::getpid()));
  fs::create_directories(staging_, ec);
  if (ec) throw DataError("cannot create " + staging_.string() + ": " + ec.message());
  methods_ = std::make_unique<std::ofstream>(staging_ / "methods.jsonl", std::ios::binary | std::ios::trunc);
  if (!*methods_) {
    cleanup();
    throw DataError("cannot write " + (staging_ / "methods.jsonl").string());
  }
}

IndexWriter::~IndexWriter() { cleanup(); }

void IndexWriter::cleanup() noexcept {
  methods_.reset();
  if (!committed_ && !staging_.empty()) {
    std::error_code ec;
    fs::remove_all(staging_, ec);
  }
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
    lock_fd_ = -1;
  }
}

void IndexWriter::add(const MethodRecord& record) {
  if (committed_) throw std::logic_error("IndexWriter::add after commit");
  if (!keys_.insert(record.method_key).second) throw DataError("duplicate method_key: " + record.method_key);
  std::string line = to_json_line(record);
  line.push_back('\n');
  methods_->write(line.data(), static_cast<std::streamsize>(line.size()));
  if (!*methods_) throw DataError("failed writing " + (staging_ / "methods.jsonl").string());
  spans_.emplace_back(offset_, static_cast<std::uint32_t>(line.size() - 1));
  offset_ += line.size();
  names_.push_back(record.name_lower);
  frequencies_.add_name(record.name);
}

void IndexWriter::commit() {
  if (committed_) return;
  methods_->close();
  if (!*methods_) throw DataError("failed writing " + (staging_ / "methods.jsonl").string());
  methods_.reset();

  write_file(staging_ / "names.idx", encode_names(spans_, names_));
  if (with_postings_) write_file(staging_ / "postings.bin", encode_postings(make_postings(names_)));
  frequencies_.save(staging_ / "frequency.tsv");

  nlohmann::ordered_json meta;
  meta["format_version"] = kIndexFormatVersion;
  meta["records"] = names_.size();
  meta["name_words"] = frequencies_.total();
  meta["vocabulary"] = frequencies_.vocabulary_size();
  meta["postings"] = with_postings_;
  write_file(staging_ / "meta.json", meta.dump(2) + "\n");

  std::error_code ec;
  // meta.json goes last so a reader never sees new counts with old data
  for (const char* name : kFiles) {
    const fs::path from = staging_ / name;
    if (!fs::exists(from)) {
      fs::remove(out_dir_ / name, ec);
      continue;
    }
    fs::rename(from, out_dir_ / name, ec);
    if (ec) throw DataError("cannot move " + from.string() + " into place: " + ec.message());
  }
  committed_ = true;
  fs::remove_all(staging_, ec);
}

// ---------------------------------------------------------------- building

BuildSummary build_index(const IngestConfig& config, const fs::path& out_dir, const JdkCatalog& catalog,
                         bool with_postings) {
  const auto started = std::chrono::steady_clock::now();
  BuildSummary summary;
  const auto repos = discover_repos(config.roots);
  IndexWriter writer(out_dir, with_postings);
  for (const auto& repo : repos) {
    stream_sources(repo, config, summary.ingest, [&](SourceFile&& file) {
      auto extraction = extract_methods(file, catalog);
      for (const auto& note : extraction.diagnostics) spdlog::warn("{}", note);
      summary.extraction_diagnostics += extraction.diagnostics.size();
      for (const auto& record : extraction.records) writer.add(record);
    });
  }
  writer.commit();
  summary.methods = writer.size();
  summary.vocabulary = writer.frequencies().vocabulary_size();
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

IndexStats compute_stats(const NameIndex& index) {
  IndexStats stats;
  stats.records = index.size();
  stats.vocabulary = index.frequencies().vocabulary_size();
  stats.name_words = index.frequencies().total();
  double sum = 0.0;
  std::uint64_t with_apis = 0;
  for (const auto& r : index.records()) {
    if (r.api_sequence.empty()) {
      ++stats.empty_api_sequences;
      continue;
    }
    const double ratio = r.jdk_ratio();
    sum += ratio;
    ++with_apis;
    ++stats.jdk_ratio_histogram[std::min<std::size_t>(9, static_cast<std::size_t>(ratio * 10.0))];
  }
  stats.mean_jdk_ratio = with_apis ? sum / static_cast<double>(with_apis) : 0.0;
  return stats;
}

}  // namespace seqmatch
