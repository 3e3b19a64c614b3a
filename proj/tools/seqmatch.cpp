// seqmatch: index Java corpora and search methods by natural-language query.

#include <httplib.h>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>

#include "seqmatch/config.hpp"
#include "seqmatch/error.hpp"
#include "seqmatch/eval.hpp"
#include "seqmatch/index.hpp"
#include "seqmatch/kernels.hpp"
#include "seqmatch/service.hpp"

namespace {

using namespace seqmatch;

httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

RerankMode mode_arg(const std::string& text) {
  auto m = parse_mode(text);
  if (!m) throw UsageError("unknown mode '" + text + "' (full, no_sbody, no_rerank)");
  return *m;
}

int cmd_index(const AppConfig& config, IngestConfig ingest, bool postings, bool json) {
  if (ingest.roots.empty()) throw UsageError("index: give at least one corpus root");
  const auto catalog = JdkCatalog::load(LexiconPaths::in_directory(config.data_dir).jdk_catalog);
  const auto s = build_index(ingest, config.index_dir, catalog, postings);
  if (json) {
    nlohmann::ordered_json j;
    j["index_dir"] = config.index_dir.string();
    j["repos"] = s.ingest.repos;
    j["java_files"] = s.ingest.java_files_seen;
    j["files_indexed"] = s.ingest.files_yielded;
    j["skipped"] = {{"oversize", s.ingest.skipped_oversize},
                    {"unreadable", s.ingest.skipped_unreadable},
                    {"excluded", s.ingest.skipped_excluded}};
    j["methods"] = s.methods;
    j["extraction_diagnostics"] = s.extraction_diagnostics;
    j["vocabulary"] = s.vocabulary;
    j["elapsed_seconds"] = s.elapsed_seconds;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << fmt::format(
        "indexed {} repos, {} of {} java files ({} skipped: {} oversize, {} unreadable, {} excluded)\n"
        "{} methods, {} name words, {} extraction notes, {:.2f}s -> {}\n",
        s.ingest.repos, s.ingest.files_yielded, s.ingest.java_files_seen, s.ingest.skipped(),
        s.ingest.skipped_oversize, s.ingest.skipped_unreadable, s.ingest.skipped_excluded, s.methods, s.vocabulary,
        s.extraction_diagnostics, s.elapsed_seconds, config.index_dir.string());
  }
  return 0;
}

int cmd_search(const AppConfig& config, const std::vector<std::string>& words, bool json, bool timing) {
  std::string query;
  for (const auto& w : words) query += (query.empty() ? "" : " ") + w;
  if (query.empty()) throw UsageError("search: empty query");
  const auto load_start = std::chrono::steady_clock::now();
  const auto engine = SearchEngine::open(config.index_dir, config.data_dir);
  const auto loaded = std::chrono::steady_clock::now() - load_start;
  const auto response = engine.search(query, config.search_options());

  if (json) {
    std::cout << render_json(response, engine.index());
  } else {
    const auto& plan = response.plan;
    std::cout << "patterns:";
    for (const auto& p : plan.patterns) {
      std::string s;
      for (const auto& w : p.words) s += ".*" + w;
      std::cout << " " << s << ".*";
    }
    std::cout << "\n" << fmt::format("{:>4}  {:>6}  {:>6}  {:>5}  {:<40} {}\n", "rank", "s_name", "s_body", "round", "method", "location");
    for (const auto& r : response.results) {
      const auto& rec = engine.index().record(r.ordinal);
      const auto parts = split_method_key(rec.method_key);
      std::cout << fmt::format("{:>4}  {:>6.4f}  {:>6.4f}  {:>5}  {:<40} {}/{}:{}\n", r.rank, r.s_name, r.s_body,
                               r.round, rec.name, parts.repo, parts.path, parts.line);
    }
    if (response.results.empty()) std::cout << "(no results)\n";
  }
  if (timing) {
    std::cerr << fmt::format("timing: load {:.1f} ms, search {:.3f} ms, pool {}, index {} methods, isa {}\n",
                             std::chrono::duration<double, std::milli>(loaded).count(),
                             std::chrono::duration<double, std::milli>(response.elapsed).count(), response.pool_size,
                             engine.index().size(), kernels::isa_name(kernels::active_isa()));
  }
  return 0;
}

int cmd_eval(const AppConfig& config, const fs::path& queries, const fs::path& judgments, const fs::path& out,
             bool json) {
  const auto engine = SearchEngine::open(config.index_dir, config.data_dir);
  const auto set = JudgmentSet::load(queries, judgments);
  const auto report = run_eval(engine, set, config.search_options());
  if (!out.empty()) {
    std::ofstream f(out);
    f << report.to_json();
    if (!f) throw DataError("cannot write " + out.string());
  }
  std::cout << (json ? report.to_json() : report.to_table());
  return 0;
}

int cmd_serve(const AppConfig& config) {
  const auto engine = SearchEngine::open(config.index_dir, config.data_dir);
  httplib::Server server;
  install_routes(server, engine, config);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  if (!server.bind_to_port(config.host, config.port))
    throw DataError(fmt::format("cannot listen on {}:{}", config.host, config.port));
  spdlog::info("serving {} methods on http://{}:{}", engine.index().size(), config.host, config.port);
  server.listen_after_bind();
  g_server = nullptr;
  return 0;
}

int cmd_stats(const AppConfig& config, bool json) {
  const auto index = NameIndex::load(config.index_dir);
  const auto s = compute_stats(index);
  if (json) {
    nlohmann::ordered_json j;
    j["records"] = s.records;
    j["vocabulary"] = s.vocabulary;
    j["name_words"] = s.name_words;
    j["postings"] = index.has_postings();
    j["empty_api_sequences"] = s.empty_api_sequences;
    j["mean_jdk_ratio"] = s.mean_jdk_ratio;
    j["jdk_ratio_histogram"] = s.jdk_ratio_histogram;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << fmt::format("records      {}\nvocabulary   {}\nname words   {}\npostings     {}\n", s.records,
                           s.vocabulary, s.name_words, index.has_postings() ? "yes" : "no");
  std::cout << fmt::format("jdk ratio    mean {:.3f} over {} methods with APIs ({} without)\n", s.mean_jdk_ratio,
                           s.records - s.empty_api_sequences, s.empty_api_sequences);
  for (std::size_t b = 0; b < s.jdk_ratio_histogram.size(); ++b) {
    std::cout << fmt::format("  [{:.1f},{:.1f}{} {}\n", b / 10.0, (b + 1) / 10.0, b == 9 ? "]" : ")",
                             s.jdk_ratio_histogram[b]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_color_mt("seqmatch");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("%^%l%$: %v");
  spdlog::set_level(spdlog::level::warn);

  AppConfig config = AppConfig::defaults();
  CLI::App app{"Index Java methods and search them with natural-language queries"};
  app.require_subcommand(1);
  std::string config_file, index_dir, data_dir, mode = "full";
  bool verbose = false, quiet = false;
  app.add_option("--config", config_file, "JSON config (index_dir, data_dir, k, pool_min, mode, host, port)");
  app.add_option("--index", index_dir, "Index directory (default $SEQMATCH_INDEX or ./seqmatch-index)");
  app.add_option("--data", data_dir, "Lexicon directory (default $SEQMATCH_DATA or the built-in data dir)");
  app.add_flag("-v,--verbose", verbose, "Info-level logging");
  app.add_flag("-q,--quiet", quiet, "Errors only");

  auto* index_cmd = app.add_subcommand("index", "Build an index from corpus roots");
  std::vector<std::string> roots, excludes;
  std::string ingest_file;
  std::uintmax_t max_bytes = 0;
  bool no_postings = false, index_json = false;
  index_cmd->add_option("roots", roots, "Corpus roots: one repo per child directory, or a directory of .java files");
  index_cmd->add_option("--ingest-config", ingest_file, "JSON {roots, max_file_bytes, exclude}");
  index_cmd->add_option("--max-file-bytes", max_bytes, "Skip larger files (default 1 MiB)");
  index_cmd->add_option("--exclude", excludes, "fnmatch pattern on repo-relative paths (repeatable)");
  index_cmd->add_flag("--no-postings", no_postings, "Skip the trigram postings file");
  index_cmd->add_flag("--json", index_json, "Print the summary as JSON");

  auto* search_cmd = app.add_subcommand("search", "Search the index");
  std::vector<std::string> query;
  std::size_t k = 0, pool_min = 0;
  bool search_json = false, timing = false;
  search_cmd->add_option("query", query, "Query words")->required();
  search_cmd->add_option("-k", k, "Results to return (default 10)");
  search_cmd->add_option("--pool-min", pool_min, "Keep relaxing patterns until the pool exceeds this (default 10)");
  search_cmd->add_option("--mode", mode, "full | no_sbody | no_rerank");
  search_cmd->add_flag("--json", search_json, "Print the full result JSON");
  search_cmd->add_flag("--timing", timing, "Report load and search time on stderr");

  auto* eval_cmd = app.add_subcommand("eval", "Compute FRank / SR@k / P@k / MRR");
  std::string queries_path, judgments_path, report_path;
  bool eval_json = false;
  eval_cmd->add_option("--queries", queries_path, "TSV query_id<TAB>text")->required();
  eval_cmd->add_option("--judgments", judgments_path, "TSV query_id<TAB>method_key<TAB>0|1")->required();
  eval_cmd->add_option("--mode", mode, "full | no_sbody | no_rerank");
  eval_cmd->add_option("--pool-min", pool_min, "Pool threshold (default 10)");
  eval_cmd->add_option("-o,--out", report_path, "Also write the JSON report here");
  eval_cmd->add_flag("--json", eval_json, "Print JSON instead of the table");

  auto* serve_cmd = app.add_subcommand("serve", "Serve GET /search and /healthz");
  std::string host;
  std::uint16_t port = 0;
  serve_cmd->add_option("--host", host, "Bind address (default 127.0.0.1)");
  serve_cmd->add_option("--port", port, "TCP port (default 8080)");
  serve_cmd->add_option("-k", k, "Default result count");
  serve_cmd->add_option("--mode", mode, "Default mode");

  auto* stats_cmd = app.add_subcommand("stats", "Describe an index");
  bool stats_json = false;
  stats_cmd->add_flag("--json", stats_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verbose) spdlog::set_level(spdlog::level::info);
    if (quiet) spdlog::set_level(spdlog::level::err);
    if (!config_file.empty()) config.merge_file(config_file);
    if (!index_dir.empty()) config.index_dir = index_dir;
    if (!data_dir.empty()) config.data_dir = data_dir;
    // explicit zeros must reach validate()
    if (search_cmd->count("-k") || serve_cmd->count("-k")) config.k = k;
    if (search_cmd->count("--pool-min") || eval_cmd->count("--pool-min")) config.pool_min = pool_min;
    if (!host.empty()) config.host = host;
    if (port) config.port = port;
    if (app.got_subcommand(search_cmd) || app.got_subcommand(eval_cmd) || app.got_subcommand(serve_cmd)) {
      if (search_cmd->count("--mode") || eval_cmd->count("--mode") || serve_cmd->count("--mode"))
        config.mode = mode_arg(mode);
    }
    config.validate();

    if (app.got_subcommand(index_cmd)) {
      IngestConfig ingest = ingest_file.empty() ? IngestConfig{} : IngestConfig::load(ingest_file);
      for (const auto& r : roots) ingest.roots.emplace_back(r);
      if (max_bytes) ingest.max_file_bytes = max_bytes;
      for (const auto& e : excludes) ingest.exclude.push_back(e);
      return cmd_index(config, std::move(ingest), !no_postings, index_json);
    }
    if (app.got_subcommand(search_cmd)) return cmd_search(config, query, search_json, timing);
    if (app.got_subcommand(eval_cmd)) return cmd_eval(config, queries_path, judgments_path, report_path, eval_json);
    if (app.got_subcommand(serve_cmd)) return cmd_serve(config);
    if (app.got_subcommand(stats_cmd)) return cmd_stats(config, stats_json);
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const DataError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 2;
  }
  return 1;
}
