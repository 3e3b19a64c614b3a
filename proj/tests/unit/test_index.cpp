#include <gtest/gtest.h>

#include "seqmatch/error.hpp"
#include "seqmatch/index.hpp"
#include "seqmatch/kernels.hpp"
#include "support.hpp"

using namespace seqmatch;
using testing_support::Gen;
using testing_support::TempDir;

namespace {

MethodRecord make_record(const std::string& name, const std::string& key, const std::string& body = "") {
  MethodRecord r;
  r.method_key = key;
  r.name = name;
  r.name_lower = kernels::lowered(name);
  r.return_type = "void";
  r.body_text = body.empty() ? "void " + name + "() {}" : body;
  r.content_hash = content_hash(r.body_text);
  return r;
}

std::vector<MethodRecord> random_records(Gen& g, std::size_t n) {
  std::vector<MethodRecord> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(make_record(testing_support::random_method_name(g), "r#F.java#" + std::to_string(i + 1)));
  return out;
}

MatchPattern random_pattern(Gen& g, std::size_t max_words = 4) {
  MatchPattern p;
  for (std::size_t i = g.between(1, max_words); i > 0; --i) {
    std::string w = g.pick(testing_support::name_vocabulary());
    if (g.coin(0.2)) w = w.substr(0, g.between(1, w.size()));  // short words bypass the trigram filter
    p.words.push_back(w);
  }
  return p;
}

const JdkCatalog& catalog() {
  static const JdkCatalog c =
      JdkCatalog::load(LexiconPaths::in_directory(LexiconPaths::default_data_dir()).jdk_catalog);
  return c;
}

}  // namespace

TEST(OrderedMatch, Examples) {
  using V = std::vector<std::string>;
  EXPECT_TRUE(ordered_match("convertinputstreamtostring", V{"convert", "inputstream", "to", "string"}));
  EXPECT_FALSE(ordered_match("convertinputstream2string", V{"convert", "inputstream", "to", "string"}));
  EXPECT_TRUE(ordered_match("x", V{"x"}));
  EXPECT_FALSE(ordered_match("stringtoint", V{"int", "string"}));
  EXPECT_FALSE(ordered_match("aa", V{"a", "a", "a"}));
  EXPECT_TRUE(ordered_match("aaa", V{"a", "a", "a"}));
  EXPECT_TRUE(ordered_match("anything", V{}));
}

TEST(OrderedMatch, SingleWordIsSubstringProperty) {
  Gen g(1);
  for (int i = 0; i < 20000; ++i) {
    const std::string name = g.word("abc", 0, 12);
    const std::string w = g.word("abc", 1, 3);
    EXPECT_EQ(ordered_match(name, std::vector<std::string>{w}), name.find(w) != std::string::npos);
  }
}

// Greedy leftmost scan agrees with an exhaustive placement search.
TEST(OrderedMatch, GreedyEqualsExhaustiveProperty) {
  Gen g(2);
  std::function<bool(const std::string&, const std::vector<std::string>&, std::size_t, std::size_t)> any;
  any = [&](const std::string& n, const std::vector<std::string>& ws, std::size_t i, std::size_t from) {
    if (i == ws.size()) return true;
    for (std::size_t p = from; p + ws[i].size() <= n.size(); ++p)
      if (n.compare(p, ws[i].size(), ws[i]) == 0 && any(n, ws, i + 1, p + ws[i].size())) return true;
    return false;
  };
  for (int i = 0; i < 20000; ++i) {
    const std::string name = g.word("ab", 0, 10);
    std::vector<std::string> ws;
    for (std::size_t k = g.between(1, 3); k > 0; --k) ws.push_back(g.word("ab", 1, 3));
    ASSERT_EQ(ordered_match(name, ws), any(name, ws, 0, 0)) << name;
  }
}

TEST(OrderedMatch, MonotoneUnderWordRemovalProperty) {
  Gen g(3);
  for (int i = 0; i < 5000; ++i) {
    const std::string name = kernels::lowered(testing_support::random_method_name(g, 6));
    auto p = random_pattern(g, 5);
    if (!ordered_match(name, p)) continue;
    while (!p.words.empty()) {
      p.words.erase(p.words.begin() + static_cast<std::ptrdiff_t>(g.below(p.words.size())));
      ASSERT_TRUE(ordered_match(name, p)) << name;
    }
  }
}

// Trigram prefilter never loses a match: 10k random names, many patterns.
TEST(NameIndex, PrefilterEqualsFullScanProperty) {
  Gen g(4);
  const auto index = NameIndex::in_memory(random_records(g, 10000), true);
  ASSERT_TRUE(index.has_postings());
  for (int i = 0; i < 400; ++i) {
    const auto p = random_pattern(g);
    ASSERT_EQ(index.search_names(p), index.full_scan(p)) << "pattern #" << i;
  }
  // random strings that are rarely vocabulary words
  for (int i = 0; i < 400; ++i) {
    MatchPattern p{{g.word("aeiostr", 1, 5)}};
    ASSERT_EQ(index.search_names(p), index.full_scan(p)) << p.words[0];
  }
}

TEST(NameIndex, WorkedExamplePatterns) {
  std::vector<MethodRecord> records = {make_record("convertInputStreamToString", "g#U.java#10"),
                                       make_record("convertInputStream2String", "g#U.java#21")};
  const auto index = NameIndex::in_memory(records);
  using V = std::vector<std::uint32_t>;
  EXPECT_EQ(index.search_names({{"convert", "inputstream", "to", "string"}}), V{0});
  EXPECT_EQ(index.search_names({{"convert", "inputstream", "string"}}), (V{0, 1}));
  EXPECT_EQ(index.search_names({{"string"}}), (V{0, 1}));
  EXPECT_EQ(index.search_names({{"zzz"}}), V{});
}

TEST(IndexWriter, RoundTripPreservesRecordsAndOrder) {
  TempDir t;
  Gen g(5);
  auto records = random_records(g, 300);
  records[7].api_sequence = {ApiToken::from_qualified("java.lang.String"), ApiToken::from_qualified("Foo.bar()")};
  records[7].param_types = {"List<String>", "int"};
  records[7].has_javadoc = true;
  {
    IndexWriter w(t.path());
    for (const auto& r : records) w.add(r);
    w.commit();
  }
  const auto loaded = NameIndex::load(t.path());
  ASSERT_EQ(loaded.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(loaded.record(static_cast<std::uint32_t>(i)), records[i]);
  EXPECT_EQ(loaded.frequencies(), NameIndex::in_memory(records).frequencies());
  EXPECT_TRUE(loaded.has_postings());
  const MatchPattern p{{"get", "string"}};
  EXPECT_EQ(loaded.search_names(p), loaded.full_scan(p));
  for (const auto& entry : fs::directory_iterator(t.path()))
    EXPECT_FALSE(entry.path().filename().string().starts_with(".staging-"));
}

TEST(IndexWriter, EmptyIndexIsValid) {
  TempDir t;
  {
    IndexWriter w(t.path());
    w.commit();
  }
  const auto index = NameIndex::load(t.path());
  EXPECT_EQ(index.size(), 0u);
  EXPECT_TRUE(index.search_names({{"string"}}).empty());
}

TEST(IndexWriter, DuplicateKeyNamesTheKey) {
  TempDir t;
  IndexWriter w(t.path());
  w.add(make_record("a", "r#A.java#1"));
  try {
    w.add(make_record("b", "r#A.java#1"));
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("r#A.java#1"), std::string::npos);
  }
}

TEST(IndexWriter, AbandonedBuildLeavesNoStagingAndKeepsOldIndex) {
  TempDir t;
  {
    IndexWriter w(t.path());
    w.add(make_record("old", "r#A.java#1"));
    w.commit();
  }
  {
    IndexWriter w(t.path());
    w.add(make_record("new", "r#A.java#1"));
    // destroyed without commit, as after an exception
  }
  for (const auto& entry : fs::directory_iterator(t.path()))
    EXPECT_FALSE(entry.path().filename().string().starts_with(".staging-")) << entry.path();
  const auto index = NameIndex::load(t.path());
  ASSERT_EQ(index.size(), 1u);
  EXPECT_EQ(index.record(0).name, "old");
}

TEST(IndexWriter, StaleStagingRemoved) {
  TempDir t;
  fs::create_directories(t / ".staging-99999");
  testing_support::write_file(t / ".staging-99999" / "methods.jsonl", "junk");
  {
    IndexWriter w(t.path());
    w.commit();
  }
  EXPECT_FALSE(fs::exists(t / ".staging-99999"));
}

TEST(IndexWriter, SecondConcurrentBuildRefused) {
  TempDir t;
  IndexWriter first(t.path());
  EXPECT_THROW(IndexWriter second(t.path()), DataError);
}

TEST(NameIndex, RejectsUnknownFormatVersion) {
  TempDir t;
  {
    IndexWriter w(t.path());
    w.commit();
  }
  auto meta = testing_support::read_file(t / "meta.json");
  meta.replace(meta.find("\"format_version\": 1"), 19, "\"format_version\": 99");
  testing_support::write_file(t / "meta.json", meta);
  EXPECT_THROW(NameIndex::load(t.path()), DataError);
  EXPECT_THROW(NameIndex::load(t / "missing"), DataError);
}

TEST(NameIndex, WithoutPostingsFallsBackToScan) {
  TempDir t;
  Gen g(6);
  const auto records = random_records(g, 200);
  {
    IndexWriter w(t.path(), false);
    for (const auto& r : records) w.add(r);
    w.commit();
  }
  EXPECT_FALSE(fs::exists(t / "postings.bin"));
  const auto index = NameIndex::load(t.path());
  EXPECT_FALSE(index.has_postings());
  const MatchPattern p{{"read", "file"}};
  EXPECT_EQ(index.search_names(p), NameIndex::in_memory(records).search_names(p));
}

TEST(BuildIndex, WorkedExampleFixture) {
  TempDir t;
  IngestConfig config;
  config.roots = {testing_support::fixtures() / "golden"};
  const auto summary = build_index(config, t / "idx", catalog());
  EXPECT_EQ(summary.methods, 2u);
  const auto index = NameIndex::load(t / "idx");
  ASSERT_EQ(index.size(), 2u);
  for (const char* w : {"convert", "input", "stream", "string"}) EXPECT_GT(index.frequencies().count(w), 0u) << w;
  const auto stats = compute_stats(index);
  EXPECT_EQ(stats.records, 2u);
  EXPECT_EQ(stats.jdk_ratio_histogram[9], 1u);
  EXPECT_EQ(stats.jdk_ratio_histogram[6], 1u);
}

TEST(BuildIndex, DeterministicBytes) {
  TempDir t;
  IngestConfig config;
  config.roots = {testing_support::fixtures() / "ablation" / "corpus"};
  build_index(config, t / "a", catalog());
  build_index(config, t / "b", catalog());
  for (const char* f : {"methods.jsonl", "names.idx", "postings.bin", "frequency.tsv", "meta.json"})
    EXPECT_EQ(testing_support::read_file(t / "a" / f), testing_support::read_file(t / "b" / f)) << f;
}
