#include <algorithm>
#include <nlohmann/json.hpp>
#include <unordered_set>

#include "seqmatch/pipeline.hpp"

namespace seqmatch {

std::vector<Candidate> iterative_search(const QueryPlan& plan, const NameIndex& index, std::size_t pool_min) {
  std::vector<Candidate> pool;
  std::vector<char> seen(index.size(), 0);
  std::unordered_set<std::string> hashes;
  for (std::size_t r = 0; r < plan.patterns.size(); ++r) {
    for (auto ordinal : index.search_names(plan.patterns[r])) {
      if (seen[ordinal]) continue;
      seen[ordinal] = 1;
      if (!hashes.insert(index.record(ordinal).content_hash).second) continue;
      pool.push_back({ordinal, static_cast<int>(r + 1)});
    }
    if (pool.size() > pool_min) break;
  }
  return pool;
}

std::vector<ScoredResult> rerank(std::span<const Candidate> candidates, const QueryPlan& plan,
                                 const NameIndex& index, RerankMode mode, std::size_t k) {
  std::vector<ScoredResult> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) {
    const auto& r = index.record(c.ordinal);
    out.push_back({r.method_key, c.ordinal, score_name(plan, r), score_body(plan, r), c.round, 0});
  }
  auto tail = [&](const ScoredResult& a, const ScoredResult& b) {
    if (a.round != b.round) return a.round < b.round;
    const auto la = index.record(a.ordinal).name.size();
    const auto lb = index.record(b.ordinal).name.size();
    if (la != lb) return la < lb;
    return a.method_key < b.method_key;
  };
  switch (mode) {
    case RerankMode::Full:
      std::stable_sort(out.begin(), out.end(), [&](const ScoredResult& a, const ScoredResult& b) {
        if (a.s_name != b.s_name) return a.s_name > b.s_name;
        if (a.s_body != b.s_body) return a.s_body > b.s_body;
        return tail(a, b);
      });
      break;
    case RerankMode::NoSbody:
      std::stable_sort(out.begin(), out.end(), [&](const ScoredResult& a, const ScoredResult& b) {
        if (a.s_name != b.s_name) return a.s_name > b.s_name;
        return tail(a, b);
      });
      break;
    case RerankMode::NoRerank:
      // candidates already arrive in (round, discovery) order
      std::stable_sort(out.begin(), out.end(),
                       [](const ScoredResult& a, const ScoredResult& b) { return a.round < b.round; });
      break;
  }
  if (k > 0 && out.size() > k) out.resize(k);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i + 1);
  return out;
}

SearchEngine::SearchEngine(std::shared_ptr<const NameIndex> index, Lexicons lexicons)
    : index_(std::move(index)), lexicons_(std::move(lexicons)) {}

SearchEngine SearchEngine::open(const fs::path& index_dir, const fs::path& data_dir) {
  auto index = std::make_shared<const NameIndex>(NameIndex::load(index_dir));
  auto lexicons = Lexicons::load(LexiconPaths::in_directory(data_dir), index->frequencies());
  return SearchEngine(std::move(index), std::move(lexicons));
}

SearchResponse SearchEngine::search(std::string_view query, const SearchOptions& options) const {
  const auto started = std::chrono::steady_clock::now();
  SearchResponse response;
  response.plan = understand_query(query, lexicons_);
  const auto pool = iterative_search(response.plan, *index_, options.pool_min);
  response.pool_size = pool.size();
  response.results = rerank(pool, response.plan, *index_, options.mode, options.k);
  response.elapsed = std::chrono::steady_clock::now() - started;
  return response;
}

std::string snippet_of(std::string_view body_text, std::size_t max_lines) {
  std::size_t end = 0;
  for (std::size_t line = 0; line < max_lines; ++line) {
    const auto nl = body_text.find('\n', end);
    if (nl == std::string_view::npos) return std::string(body_text);
    end = nl + 1;
  }
  return std::string(body_text.substr(0, end > 0 ? end - 1 : 0));
}

std::string render_json(const SearchResponse& response, const NameIndex& index) {
  using ojson = nlohmann::ordered_json;
  const auto& plan = response.plan;
  ojson kept = ojson::array();
  for (const auto& t : plan.kept_words) {
    kept.push_back(ojson{{"token", t.token},
                         {"property", std::string(to_string(t.property))},
                         {"frequency", t.frequency},
                         {"importance", t.importance}});
  }
  ojson patterns = ojson::array();
  for (const auto& p : plan.patterns) patterns.push_back(p.words);

  ojson results = ojson::array();
  for (const auto& r : response.results) {
    const auto& record = index.record(r.ordinal);
    const auto parts = split_method_key(record.method_key);
    results.push_back(ojson{{"rank", r.rank},
                            {"method_key", r.method_key},
                            {"method_name", record.name},
                            {"s_name", r.s_name},
                            {"s_body", r.s_body},
                            {"round", r.round},
                            {"repo", parts.repo},
                            {"path", parts.path},
                            {"snippet", snippet_of(record.body_text)}});
  }
  ojson doc;
  doc["query"] = plan.raw_query;
  doc["plan"] = ojson{{"base_words", plan.base_words}, {"kept_words", std::move(kept)}, {"patterns", std::move(patterns)}};
  doc["results"] = std::move(results);
  return doc.dump(2, ' ', false, ojson::error_handler_t::replace) + "\n";
}

}  // namespace seqmatch
