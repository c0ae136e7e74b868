#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "batfun/bateman.hpp"
#include "batfun/rational.hpp"

using json = nlohmann::json;
using namespace batfun;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string tmp = std::string("/tmp/batfun_cli_out_") +
                    std::to_string(::getpid()) + ".txt";
  std::string cmd =
      std::string(BATFUN_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(tmp.c_str());
  return {WEXITSTATUS(status), ss.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

TEST_CASE("eval emits certified enclosures; F_1(1) = -2/e") {
  RunResult r = run_cli("eval --n 1 --t 1 --prec 128");
  REQUIRE(r.exit_code == 0);
  json rec = json::parse(r.out);
  CHECK(rec["n"] == 1);
  Rational lo = rational_from_string(rec["F"]["lo"].get<std::string>());
  Rational hi = rational_from_string(rec["F"]["hi"].get<std::string>());
  CHECK(lo <= hi);
  // -2/e = -0.73575888234288464...
  CHECK(lo.get_d() == doctest::Approx(-0.7357588823428846).epsilon(1e-12));
  CHECK((hi - lo) < make_rational(1, 1000000000));
  // H_1(1) = -F_1(1) = 2/e.
  CHECK(rec["H"]["mid"].get<double>() ==
        doctest::Approx(0.7357588823428846).epsilon(1e-12));
}

TEST_CASE("poly round-trips: coefficients re-evaluated match the library") {
  RunResult r = run_cli("poly --n 7");
  REQUIRE(r.exit_code == 0);
  json rec = json::parse(r.out);
  REQUIRE(rec["coeffs"].size() == 8);
  std::vector<Rational> cs;
  for (const auto& c : rec["coeffs"])
    cs.push_back(rational_from_string(c.get<std::string>()));
  RatPoly p(cs);
  BatemanTable table;
  CHECK(p == table.poly(7));
  CHECK(p.eval(make_rational(3, 2)) == table.poly(7).eval(make_rational(3, 2)));
}

TEST_CASE("zeros reports the closed-form landmarks of F_2") {
  RunResult r = run_cli("zeros --n 2");
  REQUIRE(r.exit_code == 0);
  json list = json::parse(r.out);
  REQUIRE(list.size() == 1);
  const json& rec = list[0];
  // T_2 = 1 exactly, T_2* = (3+sqrt 5)/2 = 2.618033...
  CHECK(rec["T_n"]["lo"].get<std::string>() == "1");
  CHECK(rec["T_n"]["hi"].get<std::string>() == "1");
  CHECK(rec["T_n_star"]["mid"].get<double>() ==
        doctest::Approx(2.618033988749895).epsilon(1e-9));
  double m = rec["max_abs"]["mid"].get<double>();
  CHECK(m > 0.6180);
  CHECK(m < 0.6181);
}

TEST_CASE("check exits 0 on a passing suite selection") {
  RunResult r = run_cli("check --n-max 4 --suite integrals --suite identities");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  for (const auto& item : report)
    if (item.contains("pass")) CHECK(item["pass"].get<bool>());
}

TEST_CASE("figure 1 CSV: header shape and F_2 vanishing at t = 1") {
  // 480 samples over [0, 12] puts t = 1 exactly on the grid.
  RunResult r = run_cli("figure --id 1 --samples 480");
  REQUIRE(r.exit_code == 0);
  std::stringstream ss(r.out);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "t,F1,F2,F3,F4,F5");
  bool found_t1 = false;
  while (std::getline(ss, line)) {
    auto parts = split(line, ',');
    REQUIRE(parts.size() == 6);
    if (parts[0] == "1") {
      found_t1 = true;
      CHECK(std::stod(parts[2]) == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(std::stod(parts[1]) ==
            doctest::Approx(-0.7357588823428846).epsilon(1e-9));
    }
  }
  CHECK(found_t1);
}

TEST_CASE("scan stream is resumable and append-only") {
  std::string path = std::string("/tmp/batfun_cli_scan_") +
                     std::to_string(::getpid()) + ".jsonl";
  std::remove(path.c_str());
  RunResult first = run_cli("scan --max-n 4 --out " + path);
  CHECK(first.exit_code == 0);
  RunResult second = run_cli("scan --max-n 7 --out " + path);
  CHECK(second.exit_code == 0);
  std::ifstream in(path);
  std::string line;
  std::vector<int> ns;
  while (std::getline(in, line)) {
    json rec = json::parse(line);
    ns.push_back(rec["n"].get<int>());
    CHECK(rec["pass"].get<bool>());
  }
  std::remove(path.c_str());
  CHECK(ns == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("eval --n 1").exit_code == 2);           // missing --t
  CHECK(run_cli("figure --id 9").exit_code == 2);        // id out of range
  CHECK(run_cli("eval --n 1 --t bogus").exit_code == 2); // unparsable t
  CHECK(run_cli("nonsense").exit_code == 2);             // unknown subcommand
  CHECK(run_cli("--help").exit_code == 0);
}
