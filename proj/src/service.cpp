#include "seqmatch/service.hpp"

#include <httplib.h>

#include <charconv>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "seqmatch/error.hpp"

namespace seqmatch {

namespace {

HttpReply error_reply(int status, const std::string& message) {
  return {status, nlohmann::json{{"error", message}}.dump() + "\n"};
}

}  // namespace

HttpReply handle_search(const SearchEngine& engine, const AppConfig& defaults, const std::string& q, bool has_q,
                        const std::string& k, const std::string& mode) {
  if (!has_q || q.empty()) return error_reply(400, "missing query parameter q");
  SearchOptions options = defaults.search_options();
  if (!k.empty()) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(k.data(), k.data() + k.size(), value);
    if (ec != std::errc() || end != k.data() + k.size() || value == 0) return error_reply(400, "k must be a positive integer");
    options.k = value;
  }
  if (!mode.empty()) {
    auto m = parse_mode(mode);
    if (!m) return error_reply(400, "mode must be full, no_sbody or no_rerank");
    options.mode = *m;
  }
  try {
    return {200, render_json(engine.search(q, options), engine.index())};
  } catch (const UsageError& e) {
    return error_reply(400, e.what());
  }
}

HttpReply handle_healthz(const SearchEngine& engine) {
  nlohmann::ordered_json j;
  j["status"] = "ok";
  j["methods"] = engine.index().size();
  return {200, j.dump() + "\n"};
}

void install_routes(httplib::Server& server, const SearchEngine& engine, const AppConfig& defaults) {
  server.Get("/search", [&engine, &defaults](const httplib::Request& req, httplib::Response& res) {
    const auto reply = handle_search(engine, defaults, req.get_param_value("q"), req.has_param("q"),
                                     req.get_param_value("k"), req.get_param_value("mode"));
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server.Get("/healthz", [&engine](const httplib::Request&, httplib::Response& res) {
    const auto reply = handle_healthz(engine);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    spdlog::info("{} {} -> {}", req.method, req.path, res.status);
  });
}

}  // namespace seqmatch
