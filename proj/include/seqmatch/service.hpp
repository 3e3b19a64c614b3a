#pragma once

// Read-only HTTP endpoint: GET /search and GET /healthz.

#include <string>

#include "seqmatch/config.hpp"
#include "seqmatch/pipeline.hpp"

namespace httplib {
class Server;
}

namespace seqmatch {

struct HttpReply {
  int status = 200;
  std::string body;
};

// Pure request handlers, shared by the server routes and the tests.
// Parameters arrive already URL-decoded; empty strings mean "absent".
HttpReply handle_search(const SearchEngine& engine, const AppConfig& defaults, const std::string& q,
                        bool has_q, const std::string& k, const std::string& mode);
HttpReply handle_healthz(const SearchEngine& engine);

void install_routes(httplib::Server& server, const SearchEngine& engine, const AppConfig& defaults);

}  // namespace seqmatch
