#include <gtest/gtest.h>
#include <httplib.h>
#include <sys/wait.h>

#include <cstdio>
#include <thread>

#include "seqmatch/service.hpp"
#include "support.hpp"

using namespace seqmatch;
using testing_support::TempDir;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quoted(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run cli(const std::string& args) {
  const std::string cmd = quoted(SEQMATCH_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct GoldenCliIndex {
  TempDir dir;
  fs::path idx = dir / "idx";
  Run built;
  GoldenCliIndex() {
    built = cli("--index " + quoted(idx.string()) + " index " + quoted((testing_support::fixtures() / "golden").string()));
  }
};
const GoldenCliIndex& golden() {
  static const GoldenCliIndex g;
  return g;
}

const std::string kQuery = "convert an inputstream to a string";

}  // namespace

TEST(Cli, IndexSearchStats) {
  ASSERT_EQ(golden().built.code, 0) << golden().built.out;
  const std::string idx = "--index " + quoted(golden().idx.string());
  const auto search = cli(idx + " search convert an inputstream to a string");
  EXPECT_EQ(search.code, 0);
  EXPECT_NE(search.out.find("convertInputStreamToString"), std::string::npos);
  EXPECT_NE(search.out.find(".*convert.*inputstream.*to.*string.*"), std::string::npos);
  const auto stats = cli(idx + " stats --json");
  ASSERT_EQ(stats.code, 0);
  EXPECT_EQ(nlohmann::json::parse(stats.out)["records"], 2);
}

TEST(Cli, ExitCodes) {
  const std::string idx = "--index " + quoted(golden().idx.string());
  EXPECT_EQ(cli("").code, 1);                                   // no subcommand
  EXPECT_EQ(cli("frobnicate").code, 1);                         // unknown subcommand
  EXPECT_EQ(cli(idx + " search java").code, 1);                 // nothing searchable
  EXPECT_EQ(cli(idx + " search --mode fast sort list").code, 1);
  EXPECT_EQ(cli(idx + " search -k 0 sort list").code, 1);
  EXPECT_EQ(cli("--index /nonexistent/idx search sort list").code, 2);
  TempDir t;
  EXPECT_EQ(cli("--index " + quoted((t / "x").string()) + " index /nonexistent/corpus").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, JsonMatchesHttpHandlerBytes) {
  const std::string idx = "--index " + quoted(golden().idx.string());
  const auto run = cli(idx + " search --json " + quoted(kQuery));
  ASSERT_EQ(run.code, 0);
  const auto engine = SearchEngine::open(golden().idx, LexiconPaths::default_data_dir());
  AppConfig defaults;
  const auto reply = handle_search(engine, defaults, kQuery, true, "", "");
  EXPECT_EQ(reply.status, 200);
  EXPECT_EQ(run.out, reply.body);
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_NEAR(doc["results"][0]["s_name"].get<double>(), 4.0 / 6.0, 1e-4);
  EXPECT_NEAR(doc["results"][1]["s_body"].get<double>(), 1.0 / 9.0, 1e-4);
}

TEST(Cli, EvalReport) {
  TempDir t;
  const auto fx = testing_support::fixtures() / "ablation";
  const std::string idx = "--index " + quoted((t / "idx").string());
  ASSERT_EQ(cli(idx + " index " + quoted((fx / "corpus").string())).code, 0);
  const auto run = cli(idx + " eval --json --queries " + quoted((fx / "queries.tsv").string()) + " --judgments " +
                       quoted((fx / "judgments.tsv").string()) + " -o " + quoted((t / "r.json").string()));
  ASSERT_EQ(run.code, 0);
  EXPECT_EQ(run.out, testing_support::read_file(t / "r.json"));
  EXPECT_EQ(nlohmann::json::parse(run.out)["mode"], "full");
}

TEST(Handlers, BadRequests) {
  const auto engine = SearchEngine::open(golden().idx, LexiconPaths::default_data_dir());
  AppConfig defaults;
  EXPECT_EQ(handle_search(engine, defaults, "", false, "", "").status, 400);
  EXPECT_EQ(handle_search(engine, defaults, kQuery, true, "x", "").status, 400);
  EXPECT_EQ(handle_search(engine, defaults, kQuery, true, "0", "").status, 400);
  EXPECT_EQ(handle_search(engine, defaults, kQuery, true, "", "fast").status, 400);
  EXPECT_EQ(handle_search(engine, defaults, "java", true, "", "").status, 400);
  const auto one = handle_search(engine, defaults, kQuery, true, "1", "no_rerank");
  EXPECT_EQ(one.status, 200);
  EXPECT_EQ(nlohmann::json::parse(one.body)["results"].size(), 1u);
  EXPECT_EQ(nlohmann::json::parse(handle_healthz(engine).body)["methods"], 2);
}

TEST(Http, LiveServer) {
  const auto engine = SearchEngine::open(golden().idx, LexiconPaths::default_data_dir());
  AppConfig defaults;
  httplib::Server server;
  install_routes(server, engine, defaults);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  client.set_url_encode(false);  // send the form-encoded query as written
  auto res = client.Get("/search?q=convert+an+inputstream+to+a+string");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, handle_search(engine, defaults, kQuery, true, "", "").body);
  res = client.Get("/search");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  res = client.Get("/healthz");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body)["status"], "ok");

  server.stop();
  worker.join();
}
