#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bozd/io.hpp"
#include "support/fixtures.hpp"

using namespace bozd;
using nlohmann::json;

namespace {

std::string run_cli(const std::string& args, int* exit_code) {
  const char* cli = std::getenv("BOZD_CLI");
  REQUIRE(cli != nullptr);
  const std::string cmd = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe)) output += buf;
  const int status = pclose(pipe);
  *exit_code = WEXITSTATUS(status);
  return output;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("initial data json parsing and validation") {
  SUBCASE("well-formed") {
    const auto data = initial_data_from_json(
        json::parse(R"({"poles": [[0,1]], "residues": [[0,-1]]})"));
    CHECK(data.pair_count() == 1);
  }
  SUBCASE("pole in the lower half plane is named by index") {
    try {
      initial_data_from_json(json::parse(
          R"({"poles": [[0,1],[2,-0.5]], "residues": [[0,-1],[1,0.5]]})"));
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
  }
  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_AS(initial_data_from_json(json::parse(
                        R"({"poles": [[0,1]], "residues": [[0,-1]], "x": 3})")),
                    ConfigError);
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(initial_data_from_json(
                        json::parse(R"({"poles": [[0,1]], "residues": []})")),
                    ConfigError);
  }
}

TEST_CASE("manual path parsing") {
  const auto paths = manual_paths_from_json(
      json::parse(R"({"0": [[0,0],[1,1],[2,0]], "2": [[0,1],[1,2]]})"));
  CHECK(paths.size() == 2);
  CHECK(paths.at(0).nodes.size() == 3);
  CHECK(paths.at(2).nodes.size() == 2);
}

TEST_CASE("doubles round-trip through the CSV format") {
  const double v = 0.1 + 0.2;  // not representable exactly
  const std::string s = format_double(v);
  CHECK(std::stod(s) == v);
}

TEST_CASE("cli rejects malformed poles with exit code 2") {
  std::ofstream bad("/tmp/bozd_bad_data.json");
  bad << R"({"poles": [[0,1],[1,-2]], "residues": [[0,-1],[1,1]]})";
  bad.close();
  int code = 0;
  const std::string out = run_cli(
      "--data /tmp/bozd_bad_data.json --out /tmp/bozd_t1 zd --t 1 --x0 0 "
      "--x1 1 --epsilon 0.05",
      &code);
  CHECK(code == 2);
  CHECK(out.find("1") != std::string::npos);  // offending index
}

TEST_CASE("cli profile run emits config-stamped csv") {
  int code = 0;
  run_cli(
      "--data lorentzian --out /tmp/bozd_t2 profile --t 1.0 --x0 -1 --x1 3 "
      "--nx 41 --epsilon 0.05",
      &code);
  CHECK(code == 0);
  const std::string csv = read_file("/tmp/bozd_t2/profile.csv");
  CHECK(csv.find("# config: {") == 0);
  CHECK(csv.find("\"subcommand\":\"profile\"") != std::string::npos);
  CHECK(csv.find("# columns: x,u_zd,u_exact,ubar,J") != std::string::npos);
  // Config must round-trip as canonical JSON.
  const auto head = csv.substr(10, csv.find('\n') - 10);
  const json parsed = json::parse(head);
  CHECK(json::parse(parsed.dump()) == parsed);
}

TEST_CASE("cli matsuno run produces the soliton profile") {
  int code = 0;
  run_cli("--out /tmp/bozd_t3 matsuno --N 1 --t 0 --x0 0 --x1 0 --nx 1",
          &code);
  CHECK(code == 0);
  const std::string csv = read_file("/tmp/bozd_t3/matsuno.csv");
  // u(0,0) = 2/(1+0) = 2 for N=1.
  CHECK(csv.find("\n0,2\n") != std::string::npos);
}

TEST_CASE("cli stokes-trace emits contour diagnostics") {
  int code = 0;
  run_cli("--data lorentzian --out /tmp/bozd_t4 stokes-trace --t 0.2 --x 0.1 "
          "--epsilon 0.05",
          &code);
  CHECK(code == 0);
  const std::string csv = read_file("/tmp/bozd_t4/contours.csv");
  CHECK(csv.find("# columns: contour,arc,re,im,re_E,im_E") !=
        std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') > 20);
}

TEST_CASE("cli selftest passes") {
  int code = 0;
  const std::string out = run_cli("selftest", &code);
  INFO(out);
  CHECK(code == 0);
}
