#include "doctest.h"

#include "commands.hpp"
#include "document.hpp"
#include "family_spec.hpp"
#include "flagforge/simplex_flag.hpp"
#include "helpers.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

using namespace flagforge;
using namespace flagforge::cli;
using testing::random_poly;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("family spec parsing") {
  SetFamily f = parse_family("1,2,3;1,2,4");
  CHECK(f.k() == 2);
  CHECK(f.r() == 4);
  CHECK(format_family(f) == "1,2,3;1,2,4");

  CHECK_THROWS_AS(parse_family("1,1,2;3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("1,2;1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("1,2;;3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}

TEST_CASE("documents round-trip bit-exactly") {
  std::mt19937 rng(99);
  for (int it = 0; it < 30; ++it) {
    Polynomial p = random_poly(rng, 3, 8, 4, 1000000);
    Json doc = polynomial_document(p, "x");
    Json reparsed = Json::parse(doc.dump());
    CHECK(polynomial_from_document(reparsed) == p);
  }
  // Coefficients beyond 64 bits survive the decimal-string form.
  Polynomial big(2);
  big.add_term({1, 1}, Int("123456789012345678901234567890"));
  CHECK(polynomial_from_document(Json::parse(polynomial_document(big, "x").dump())) == big);
}

TEST_CASE("flag command reproduces the worked example") {
  CliResult res = run({"flag", "--family", "1,2,3;1,2,4", "--ell", "2"});
  REQUIRE(res.code == 0);
  Json doc = Json::parse(res.out);
  CHECK(doc["polynomial"]["terms"].size() == 10);
  CHECK(doc["polynomial"]["terms"][0]["coef"] == "7");
  Polynomial p = polynomial_from_document(doc["polynomial"]);
  CHECK(p.coeff({1, 1}) == 22);
  CHECK(p.coeff({3, 0}) == 1);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* format : {"json", "csv"}) {
    CliResult a = run({"verify", "--family", "1,2,3;1,4", "--ell", "2",
                       "--format", format});
    CliResult b = run({"verify", "--family", "1,2,3;1,4", "--ell", "2",
                       "--format", format});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("csv flattens exponents and coefficient") {
  CliResult res = run({"fpoly", "--family", "1,2;1,3", "--format", "csv"});
  CHECK(res.code == 0);
  CHECK(res.out == "x1,coef\n0,4\n1,4\n2,1\n");
}

TEST_CASE("strict and phi forms") {
  CliResult strict = run({"flag", "--family", "1,2;1,3", "--ell", "2",
                          "--strict", "--format", "csv"});
  CHECK(strict.out == "x1,x2,coef\n0,1,8\n0,2,4\n1,1,4\n");

  CliResult phi = run({"flag", "--family", "1,2;1,3", "--ell", "2", "--phi"});
  Json doc = Json::parse(phi.out);
  CHECK(doc["polynomial"]["variables"][0] == "y1");
}

TEST_CASE("exit codes: parse failure, budget, verify") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"flag", "--family", "1,2;;3", "--ell", "1"}).code == 2);
  CHECK(run({"flag", "--family", "1,2;1,3", "--ell", "0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"extremal", "max-faces", "--r", "4", "--d", "9"}).code == 2);
  CHECK(run({"master", "--k", "4"}).code == 3);

  setenv("FLAGFORGE_BUDGET", "10", 1);
  CHECK(run({"verify", "--family", "1,2,3;1,2,4", "--ell", "1"}).code == 3);
  setenv("FLAGFORGE_BUDGET", "junk", 1);
  CHECK(run({"master", "--k", "2"}).code == 2);
  unsetenv("FLAGFORGE_BUDGET");
  CHECK(run({"verify", "--family", "1,2,3;1,2,4", "--ell", "1"}).code == 0);
}

TEST_CASE("master command reports the rhombus data") {
  CliResult res = run({"master", "--k", "2", "--ell", "2"});
  REQUIRE(res.code == 0);
  Json doc = Json::parse(res.out);
  CHECK(doc["family"] == "1,2;1,3");
  CHECK(doc["dim"] == 2);
  CHECK(doc["f_vector"] == Json::array({"4", "4", "1"}));
  CHECK(doc["num_chains"] == 25);
}

TEST_CASE("construct command spans the derived polytopes") {
  Json cube = Json::parse(
      run({"construct", "--op", "hypercube", "--d", "3", "--ell", "1"}).out);
  CHECK(polynomial_from_document(cube["polynomial"]).coeff_sum() == 27);

  Json pyr = Json::parse(
      run({"construct", "--op", "pyramid", "--r", "2", "--ell", "1"}).out);
  CHECK(polynomial_from_document(pyr["polynomial"]) == f_simplex(3));

  Json join = Json::parse(
      run({"construct", "--op", "join", "--r", "2,2", "--ell", "1"}).out);
  CHECK(polynomial_from_document(join["polynomial"]) == f_simplex(4));

  Json prod = Json::parse(
      run({"construct", "--op", "product", "--r", "2,2", "--ell", "2"}).out);
  Polynomial lin = flag_simplex(2, {2, 1});
  CHECK(polynomial_from_document(prod["polynomial"]) == lin * lin);

  CHECK(run({"construct", "--op", "moebius", "--ell", "1"}).code == 2);
}

TEST_SUITE_END();
