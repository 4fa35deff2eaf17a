// Drives the installed command-line tool as a subprocess.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" ISOGRASS_CLI_PATH "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("space") {
  auto r = cli("space I:8,2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "dimension: 11"));
  CHECK(contains(r.out, "gen p1"));
  r = cli("space RG:8,7");
  CHECK(contains(r.out, "normalized to S:7"));
  CHECK(cli("space I:7,2").status == 2);
  CHECK(cli("space").status == 2);
}

TEST_CASE("ring") {
  auto r = cli("ring RG:5,2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "top degree: 6"));
  r = cli("ring RG:6,2");
  CHECK(r.status == 3);
  r = cli("--json ring I:10,3 --trace");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == "iso-grass/presentation@1");
  CHECK(j["trace"]["remark_formula"]["discrepancy"] == true);
  CHECK(contains(cli("ring CG:4,2").out, "euler: 6"));
}

TEST_CASE("poincare and height") {
  auto r = cli("poincare CG:4,2");
  CHECK(contains(r.out, "1 + x^2 + 2*x^4 + x^6 + x^8"));
  CHECK(contains(r.out, "palindromic: yes"));
  r = cli("height I:8,2 --element p1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "height: 1"));
  CHECK(contains(r.out, "agree: yes"));
  CHECK(contains(cli("height I:10,4 --element p1").out, "height: 0"));
  CHECK(cli("height I:8,2 --element e --cap 2").status == 1);
  CHECK(cli("height I:8,2 --element 'p1^'").status == 2);
  CHECK(cli("height I:8,2 --element 1").status == 2);
  r = cli("height I:8,2 --element p2");
  CHECK(r.status == 2);
  CHECK(contains(r.out, "UnknownGenerator(p2)"));
  CHECK(contains(cli("eval I:8,2 'e^4'").out, "0"));
}

TEST_CASE("verdict") {
  auto r = cli("verdict I:10,3 I:10,4");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "ForcedZero HeightMismatch(1,0)"));
  CHECK(contains(cli("verdict I:4,2 I:4,1").out, "AnyDegreePossible SphereTarget(3)"));
  CHECK(contains(cli("verdict I:10,2 I:10,5").out, "H1Mismatch(0,1)"));
  CHECK(contains(cli("verdict I:10,2 RG:8,3").out, "HeightMismatch(1,2)"));
  r = cli("verdict I:10,3 I:10,2");
  CHECK(r.status == 4);
  CHECK(contains(r.out, "18"));
  CHECK(contains(r.out, "15"));
}

TEST_CASE("enumerate and verify") {
  auto r = cli("--json enumerate --family IsoReal --bound 12");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound"] == 12);
  CHECK(j["summary"]["ForcedZero"] == j["pairs"].size());
  CHECK(cli("enumerate --family Bogus").status == 2);
  CHECK(cli("enumerate --bound 0").status == 2);

  r = cli("verify --bound 12");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "OK"));
  r = cli("--json verify", "ISOGRASS_BOUND=12");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
}

TEST_CASE("verify at the default bound reports the counterexamples") {
  const auto r = cli("verify");
  CHECK(r.status == 1);
  CHECK(contains(r.out, "FAILED"));
  CHECK(contains(r.out, "counterexamples: "));
}

TEST_CASE("usage") {
  CHECK(cli("--help").status == 0);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("").status != 0);
}
