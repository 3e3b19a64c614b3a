#include "seqmatch/config.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "seqmatch/error.hpp"

namespace seqmatch {

AppConfig AppConfig::defaults() {
  AppConfig c;
  const char* env = std::getenv("SEQMATCH_INDEX");
  c.index_dir = env && *env ? fs::path(env) : fs::path("seqmatch-index");
  c.data_dir = LexiconPaths::default_data_dir();
  return c;
}

void AppConfig::merge_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError(path.string() + ": expected a JSON object");
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "index_dir") index_dir = resolve(value.get<std::string>());
      else if (key == "data_dir") data_dir = resolve(value.get<std::string>());
      else if (key == "k") k = value.get<std::size_t>();
      else if (key == "pool_min") pool_min = value.get<std::size_t>();
      else if (key == "host") host = value.get<std::string>();
      else if (key == "port") port = value.get<std::uint16_t>();
      else if (key == "mode") {
        auto m = parse_mode(value.get<std::string>());
        if (!m) throw UsageError(path.string() + ": unknown mode " + value.dump());
        mode = *m;
      } else {
        throw UsageError(path.string() + ": unknown key " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

void AppConfig::validate() const {
  if (k < 1) throw UsageError("k must be at least 1");
  if (pool_min < 1) throw UsageError("pool_min must be at least 1");
}

}  // namespace seqmatch
