#include "seqmatch/eval.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>

#include "seqmatch/error.hpp"

namespace seqmatch {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename Fn>
void read_tsv(const fs::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    fn(split_tabs(line), number);
  }
}

}  // namespace

bool JudgmentSet::relevant(const std::string& query_id, const std::string& method_key) const {
  auto it = entries.find({query_id, method_key});
  return it != entries.end() && it->second;
}

JudgmentSet JudgmentSet::load(const fs::path& queries_path, const fs::path& judgments_path) {
  JudgmentSet set;
  std::set<std::string> ids;
  read_tsv(queries_path, [&](const std::vector<std::string>& f, std::size_t n) {
    if (f.size() != 2 || f[0].empty()) throw DataError(fmt::format("{}:{}: expected query_id<TAB>text", queries_path.string(), n));
    if (!ids.insert(f[0]).second) throw DataError(fmt::format("{}:{}: repeated query id {}", queries_path.string(), n, f[0]));
    set.queries.emplace_back(f[0], f[1]);
  });
  read_tsv(judgments_path, [&](const std::vector<std::string>& f, std::size_t n) {
    if (f.size() != 3 || (f[2] != "0" && f[2] != "1"))
      throw DataError(fmt::format("{}:{}: expected query_id<TAB>method_key<TAB>0|1", judgments_path.string(), n));
    if (!ids.contains(f[0])) spdlog::warn("{}:{}: judgment for unknown query {}", judgments_path.string(), n, f[0]);
    set.entries[{f[0], f[1]}] = f[2] == "1";
  });
  return set;
}

FRank frank(std::span<const std::string> ranked_keys, const JudgmentSet& judgments, const std::string& query_id) {
  for (std::size_t i = 0; i < ranked_keys.size(); ++i)
    if (judgments.relevant(query_id, ranked_keys[i])) return static_cast<int>(i + 1);
  return std::nullopt;
}

double success_rate(std::span<const FRank> franks, int k) {
  if (franks.empty()) return 0.0;
  const auto hits = std::count_if(franks.begin(), franks.end(), [k](const FRank& f) { return f && *f <= k; });
  return static_cast<double>(hits) / static_cast<double>(franks.size());
}

double mrr(std::span<const FRank> franks, NotFoundPolicy policy, int k_max) {
  if (franks.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& f : franks) {
    if (f) sum += 1.0 / *f;
    else if (policy == NotFoundPolicy::PenaltyRank) sum += 1.0 / (k_max + 1);
  }
  return sum / static_cast<double>(franks.size());
}

double precision_at(std::span<const std::size_t> relevant_in_top_k, int k) {
  if (relevant_in_top_k.empty() || k <= 0) return 0.0;
  double sum = 0.0;
  for (auto r : relevant_in_top_k) sum += static_cast<double>(r) / k;
  return sum / static_cast<double>(relevant_in_top_k.size());
}

std::size_t relevant_in_top(std::span<const std::string> ranked_keys, const JudgmentSet& judgments,
                            const std::string& query_id, int k) {
  const auto n = std::min<std::size_t>(ranked_keys.size(), static_cast<std::size_t>(std::max(k, 0)));
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (judgments.relevant(query_id, ranked_keys[i])) ++count;
  return count;
}

MetricsReport make_report(std::vector<std::pair<std::string, FRank>> per_query,
                          const std::map<int, std::vector<std::size_t>>& relevant_counts, std::span<const int> ks) {
  MetricsReport report;
  report.per_query = std::move(per_query);
  report.q = report.per_query.size();
  std::vector<FRank> franks;
  for (const auto& [id, f] : report.per_query) franks.push_back(f);
  for (int k : ks) {
    report.sr_at[k] = success_rate(franks, k);
    if (auto it = relevant_counts.find(k); it != relevant_counts.end()) report.p_at[k] = precision_at(it->second, k);
  }
  report.mrr = mrr(franks);
  return report;
}

MetricsReport run_eval(const SearchEngine& engine, const JudgmentSet& judgments, const SearchOptions& options) {
  std::set<std::string> known;
  for (const auto& r : engine.index().records()) known.insert(r.method_key);
  std::size_t dangling = 0;
  for (const auto& [key, relevant] : judgments.entries) {
    if (!known.contains(key.second)) {
      spdlog::warn("judgment references unknown method_key {} (query {})", key.second, key.first);
      ++dangling;
    }
  }

  constexpr int kKs[] = {1, 5, 10};
  std::vector<std::pair<std::string, FRank>> per_query;
  std::map<int, std::vector<std::size_t>> counts;
  SearchOptions opts = options;
  opts.k = std::max<std::size_t>(opts.k, 10);
  for (const auto& [id, text] : judgments.queries) {
    std::vector<std::string> keys;
    try {
      for (const auto& r : engine.search(text, opts).results) keys.push_back(r.method_key);
    } catch (const UsageError& e) {
      spdlog::warn("query {}: {}", id, e.what());
    }
    if (keys.size() > 10) keys.resize(10);
    per_query.emplace_back(id, frank(keys, judgments, id));
    for (int k : kKs) counts[k].push_back(relevant_in_top(keys, judgments, id, k));
  }
  auto report = make_report(std::move(per_query), counts, kKs);
  report.mode = std::string(to_string(options.mode));
  report.dangling_judgments = dangling;
  return report;
}

std::string MetricsReport::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode;
  j["queries"] = q;
  j["mrr"] = mrr;
  nlohmann::ordered_json sr, p;
  for (const auto& [k, v] : sr_at) sr[std::to_string(k)] = v;
  for (const auto& [k, v] : p_at) p[std::to_string(k)] = v;
  j["success_rate"] = sr;
  j["precision"] = p;
  j["dangling_judgments"] = dangling_judgments;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [id, f] : per_query) {
    rows.push_back({{"query_id", id}, {"frank", f ? nlohmann::ordered_json(*f) : nlohmann::ordered_json("NF")}});
  }
  j["per_query"] = rows;
  return j.dump(2) + "\n";
}

std::string MetricsReport::to_table() const {
  std::string out = fmt::format("mode {}  queries {}\n", mode, q);
  out += fmt::format("{:<8}{:>8}{:>8}{:>8}\n", "", "@1", "@5", "@10");
  auto row = [&](const char* label, const std::map<int, double>& m) {
    auto get = [&](int k) { auto it = m.find(k); return it == m.end() ? 0.0 : it->second; };
    out += fmt::format("{:<8}{:>8.3f}{:>8.3f}{:>8.3f}\n", label, get(1), get(5), get(10));
  };
  row("SR", sr_at);
  row("P", p_at);
  out += fmt::format("MRR     {:>8.3f}\n", mrr);
  for (const auto& [id, f] : per_query) out += fmt::format("  {:<12} {}\n", id, f ? std::to_string(*f) : "NF");
  return out;
}

}  // namespace seqmatch
