#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "gk/verify.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GKVERIFY_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("query subcommand") {
  auto r = run("query \"L45+(q=9)\" t");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"t\": 23") != std::string::npos);

  auto z = run("query \"O-(n=30,q=4)\" zeta");
  CHECK(z.exit_code == 0);
  // T = {t-2, t-3, t-5} with t = 23
  CHECK(z.out.find("\"T\": [") != std::string::npos);
  CHECK(z.out.find("18") != std::string::npos);
  CHECK(z.out.find("20") != std::string::npos);
  CHECK(z.out.find("21") != std::string::npos);

  auto p = run("query \"S(n=28,q=3)\" pexp");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("\"pexp\": \"81\"") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("query \"Z9(q=1)\" t").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
  CHECK(run("query \"L45+(q=9)\" nonsense").exit_code == 2);
}

TEST_CASE("verify subcommand and report determinism") {
  auto r = run("verify --lemma kspot --json -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);

  auto a = run("verify --lemma zsigmondy --amax 12 --imax 12 --workers 1 --json -");
  auto b = run("verify --lemma zsigmondy --amax 12 --imax 12 --workers 4 --json -");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);  // byte-identical report for any worker count
}

TEST_CASE("eliminate subcommand") {
  auto r = run("eliminate \"O-(n=30,q=3)\" \"O-(n=30,u=2)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pattern\": \"tplneq4\"") != std::string::npos);
  CHECK(r.out.find("\"verified\": true") != std::string::npos);

  auto c = run("eliminate \"S(n=29,q=5)\" \"S(n=30,u=2)\"");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("class-mismatch") != std::string::npos);
}

TEST_CASE("export subcommand") {
  auto d = run("export \"S(n=14,q=3)\" --format dot");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("graph \"S(n=14,q=3)\"") != std::string::npos);
  CHECK(d.out.find(" -- ") != std::string::npos);

  auto j = run("export \"S(n=14,q=3)\" --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"vertices\"") != std::string::npos);
  CHECK(run("export \"S(n=14,q=3)\" --format yaml").exit_code == 2);
}

TEST_CASE("config file supplies flag defaults") {
  std::string path = "gkverify_test_config.ini";
  {
    std::ofstream os(path);
    os << "amax=10\nimax=10\n";
  }
  auto r = run("verify --lemma zsigmondy --config " + path + " --json -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[2,10]") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("lemma registry covers the acceptance campaign") {
  int acceptance = 0;
  for (const auto& info : gk::lemma_registry())
    if (info.in_acceptance) ++acceptance;
  CHECK(acceptance == 13);
  CHECK_THROWS_AS(gk::run_lemma("nope", gk::GridSpec{}), std::domain_error);
}
