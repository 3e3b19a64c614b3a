#include <algorithm>

#include "seqmatch/kernels.hpp"
#include "seqmatch/pipeline.hpp"

namespace seqmatch {

NameAlignment best_name_alignment(std::span<const std::string> words, std::string_view name) {
  const std::size_t n = words.size();
  const std::size_t len = name.size();
  // f[i][p]: best alignment of words[i..] inside name[p..]
  std::vector<NameAlignment> next(len + 1), cur(len + 1);
  for (std::size_t i = n; i-- > 0;) {
    const std::string& w = words[i];
    cur[len] = next[len];
    for (std::size_t p = len; p-- > 0;) {
      NameAlignment best = std::max(next[p], cur[p + 1]);
      if (!w.empty() && p + w.size() <= len && name.compare(p, w.size(), w) == 0) {
        const NameAlignment& rest = next[p + w.size()];
        best = std::max(best, NameAlignment{rest.words + 1, rest.chars + w.size()});
      }
      cur[p] = best;
    }
    std::swap(cur, next);
  }
  return next[0];
}

double score_name(const QueryPlan& plan, const MethodRecord& record) {
  if (plan.nq() == 0 || record.name_lower.empty()) return 0.0;
  const auto words = plan.kept_tokens();
  const auto a = best_name_alignment(words, record.name_lower);
  if (a.words == 0) return 0.0;
  return static_cast<double>(a.words * a.chars) / static_cast<double>(plan.nq() * record.name_lower.size());
}

BodyTerms body_terms(std::span<const std::string> words, std::span<const ApiToken> apis) {
  BodyTerms terms;
  terms.apis = apis.size();
  std::vector<std::string> lowered;
  lowered.reserve(apis.size());
  for (const auto& t : apis) {
    lowered.push_back(kernels::lowered(t.simple));
    if (t.is_jdk) ++terms.jdk_apis;
  }
  // hit[i][j]: word i occurs in token j
  std::vector<std::vector<char>> hit(words.size(), std::vector<char>(apis.size(), 0));
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < apis.size(); ++j) {
      hit[i][j] = !words[i].empty() && kernels::find(lowered[j], words[i]) != kernels::npos;
      any = any || hit[i][j];
    }
    if (any) ++terms.matched_words;
  }
  std::vector<std::size_t> prev(apis.size() + 1, 0), row(apis.size() + 1, 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < apis.size(); ++j)
      row[j + 1] = hit[i][j] ? prev[j] + 1 : std::max(prev[j + 1], row[j]);
    std::swap(prev, row);
  }
  terms.lcs = prev[apis.size()];
  return terms;
}

double score_body(const QueryPlan& plan, const MethodRecord& record) {
  if (plan.nq() == 0 || record.api_sequence.empty()) return 0.0;
  const auto words = plan.kept_tokens();
  const auto t = body_terms(words, record.api_sequence);
  const std::size_t nq = plan.nq();
  return static_cast<double>(t.matched_words * t.lcs * t.jdk_apis) / static_cast<double>(nq * nq * t.apis);
}

}  // namespace seqmatch
