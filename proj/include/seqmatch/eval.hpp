#pragma once

// FRank, SuccessRate@k, Precision@k and MRR over a judged query set.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqmatch/pipeline.hpp"

namespace seqmatch {

namespace fs = std::filesystem;

// 1-based rank of the first relevant result; nullopt = not found in the list.
using FRank = std::optional<int>;

// How a not-found query enters the reciprocal-rank mean.
//   Zero:        contributes 0 (default)
//   PenaltyRank: counts as rank k_max + 1
enum class NotFoundPolicy { Zero, PenaltyRank };

struct JudgmentSet {
  std::vector<std::pair<std::string, std::string>> queries;  // (query_id, text), file order
  std::map<std::pair<std::string, std::string>, bool> entries;  // (query_id, method_key) -> relevant

  bool relevant(const std::string& query_id, const std::string& method_key) const;
  // queries: query_id<TAB>text; judgments: query_id<TAB>method_key<TAB>0|1.
  // Throws DataError on malformed lines or repeated query ids.
  static JudgmentSet load(const fs::path& queries_path, const fs::path& judgments_path);
};

FRank frank(std::span<const std::string> ranked_keys, const JudgmentSet& judgments, const std::string& query_id);
double success_rate(std::span<const FRank> franks, int k);
double mrr(std::span<const FRank> franks, NotFoundPolicy policy = NotFoundPolicy::Zero, int k_max = 10);

// Relevant results among the first k of each query, divided by k, averaged.
double precision_at(std::span<const std::size_t> relevant_in_top_k, int k);
std::size_t relevant_in_top(std::span<const std::string> ranked_keys, const JudgmentSet& judgments,
                            const std::string& query_id, int k);

struct MetricsReport {
  std::string mode;
  std::vector<std::pair<std::string, FRank>> per_query;
  std::map<int, double> sr_at;
  std::map<int, double> p_at;
  double mrr = 0.0;
  std::size_t q = 0;
  std::size_t dangling_judgments = 0;

  std::string to_json() const;   // pretty, trailing newline
  std::string to_table() const;  // plain text
};

// Metrics from per-query FRanks and relevant-in-top-k counts.
MetricsReport make_report(std::vector<std::pair<std::string, FRank>> per_query,
                          const std::map<int, std::vector<std::size_t>>& relevant_counts,
                          std::span<const int> ks = std::initializer_list<int>{1, 5, 10});

MetricsReport run_eval(const SearchEngine& engine, const JudgmentSet& judgments, const SearchOptions& options);

}  // namespace seqmatch
