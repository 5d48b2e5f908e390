#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "foliation/ratfunc.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(FOLIATION_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

std::string job(const std::string& name) {
  return std::string(FOLIATION_JOB_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli: sigma on the V(xy) catalog case") {
  CliResult r = run_cli("sigma --k 1 " + job("sigma_xy.job"));
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["k"] == 1);
  CHECK(out["rigorous"] == false);
  // generators cut out V(y) inside V: the list contains y itself
  bool has_y = false;
  for (const auto& g : out["generators"])
    if (g.get<std::string>() == "y") has_y = true;
  CHECK(has_y);

  // round-trip: every emitted polynomial re-parses to an equal value
  std::vector<std::string> vars = {"x", "y"};
  for (const auto& g : out["generators"]) {
    fol::MultiPoly p = fol::parse_poly(g.get<std::string>(), vars);
    CHECK(p.str() == g.get<std::string>());
  }
}

TEST_CASE("cli: sigma on a chart with a nontrivial defining ideal") {
  // the leaf through any point of X = V(y - x^2) is the parabola itself,
  // which meets V(y) only at the origin: the locus is empty
  CliResult r = run_cli("sigma --k 1 " + job("sigma_parabola.job"));
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  bool has_unit = false;
  for (const auto& g : out["generators"])
    if (g.get<std::string>() == "1") has_unit = true;
  CHECK(has_unit);
}

TEST_CASE("cli: rational function output re-parses to an equal value") {
  CliResult r = run_cli("gauss-manin " + job("legendre.job"));
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  std::vector<std::string> base = {"l"};
  for (const auto& row : out["omega"][0])
    for (const auto& entry : row) {
      fol::RationalFunc f = fol::parse_ratfunc(entry.get<std::string>(), base);
      CHECK(f.str() == entry.get<std::string>());
    }
}

TEST_CASE("cli: check-foliation error path exits 2 with the error name") {
  CliResult r = run_cli("check-foliation " + job("noncommuting.job"));
  CHECK(r.status == 2);
  json out = json::parse(r.out);
  CHECK(out["error"] == "CommutationFailure");
}

TEST_CASE("cli: picard-fuchs on the constant family") {
  CliResult r = run_cli("picard-fuchs " + job("constant_family.job"));
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["order"] == 1);
  CHECK(out["operator"] == "d");
}

TEST_CASE("cli: byte-identical output across runs") {
  for (const char* j : {"sigma_xy.job", "legendre.job"}) {
    std::string sub = std::string(j) == "legendre.job" ? "gauss-manin " : "sigma --k 1 ";
    CliResult a = run_cli(sub + job(j));
    CliResult b = run_cli(sub + job(j));
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: parse errors exit 1") {
  // malformed job file
  std::string bad = std::string(FOLIATION_JOB_DIR) + "/../CMakeLists.txt";
  CliResult r = run_cli("sigma --k 1 " + bad);
  CHECK(r.status == 1);

  // wrong blocks for the subcommand: family job fed to sigma
  CliResult r2 = run_cli("sigma --k 1 " + job("legendre.job"));
  CHECK(r2.status == 1);
}

TEST_CASE("cli: periods emits [re, im] pairs with an error estimate") {
  CliResult r = run_cli("periods --lambda 1/3 --prec 10 " + job("legendre.job"));
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out.contains("error_estimate"));
  CHECK(out["periods"].size() == 2);
  CHECK(out["periods"][0][0].size() == 2);
  CHECK(out["beta_imag_positive_definite"] == true);
}
