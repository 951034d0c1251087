#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = monoconv::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("moments as CSV") {
  const auto r = run({"moments", "--m", "2", "--n", "8"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "n,moment\n0,1\n1,2\n2,7\n3,29\n4,131\n5,625\n6,3099\n7,15818\n8,82595\n");
}

TEST_CASE("moments as JSON with polynomials and cumulants") {
  const auto r = run({"moments", "--m", "3", "--n", "3", "--poly", "--cumulants", "8",
                      "--format", "json", "--seed", "5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 5);
  CHECK(j["moments"] == nlohmann::json::array({"1", "3", "15", "87"}));
  CHECK(j["polynomials"][2]["polynomial"] == "3/2*m^2 + 1/2*m");
  CHECK(j["polynomials"][2]["coefficients"] == nlohmann::json::array({"0", "1/2", "3/2"}));
  CHECK(j["cumulants"][7] == "7/12");
}

TEST_CASE("CSV moments reject cumulants") {
  const auto r = run({"moments", "--m", "2", "--n", "3", "--cumulants", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--cumulants") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"moments", "--m", "0", "--n", "3"}).code == 2);
  CHECK(run({"moments", "--n", "3"}).code == 2);
  CHECK(run({"moments", "--m", "2", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "nothing"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"density", "--m", "2", "--x-min", "1", "--x-max", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("support endpoints") {
  const auto r = run({"support", "--m-max", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["endpoints"][0]["a_exact"] == "2");
  CHECK(j["endpoints"][1]["a_exact"] == "5/2");
  CHECK(j["endpoints"][2]["a_exact"] == "29/10");
  CHECK(j["endpoints"][2]["lower_bound"] == true);
  CHECK(j["endpoints"][2]["upper_bound"] == true);
  for (const auto& row : j["endpoints"]) CHECK(row["ratio_bound"] == true);
  CHECK(j["passed"] == true);
  const auto csv = run({"support", "--m-max", "2", "--format", "csv"});
  CHECK(csv.out.find("2,5/2,2.5,,,true,true\n") != std::string::npos);
}

TEST_CASE("cumulants and polynomials") {
  const auto r = run({"cumulants", "--k", "6", "--format", "csv"});
  CHECK(r.out == "k,cumulant\n1,0\n2,1\n3,0\n4,1/2\n5,0\n6,1/2\n");
  const auto p = run({"poly", "--n", "2", "--format", "csv"});
  CHECK(p.out == "n,polynomial\n0,1\n1,m\n2,3/2*m^2 + 1/2*m\n");
}

TEST_CASE("orthogonal polynomials") {
  const auto r = run({"orthopoly", "--m", "2", "--order", "4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["beta"][1] == "2");
  CHECK(j["beta"][2] == "3/2");
  CHECK(j["polynomials"][4]["coefficients"] == nlohmann::json::array({"3", "0", "-5", "0", "1"}));
  CHECK(j["orthogonal"] == true);
}

TEST_CASE("density output") {
  const auto r = run({"density", "--m", "2", "--x-min", "0", "--x-max", "2", "--samples", "3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,density,residual,converged");
  std::getline(lines, line);
  CHECK(line.rfind("0,0.1967", 0) == 0);
  const auto j = nlohmann::json::parse(
      run({"density", "--m", "1", "--samples", "5", "--format", "json"}).out);
  CHECK(j["samples"].size() == 5);
  CHECK(j["tolerance"] == 1e-6);
  const auto svg = run({"density", "--m", "2", "--format", "svg", "--samples", "50"});
  CHECK(svg.out.find("<polyline") != std::string::npos);
  CHECK(svg.out.find("seed=42") != std::string::npos);
}

TEST_CASE("plot writes a file and output is deterministic") {
  const std::string path = "test_cli_plot.svg";
  REQUIRE(run({"plot", "--m", "2", "--samples", "100", "-o", path}).code == 0);
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  const auto again = run({"plot", "--m", "2", "--samples", "100"});
  CHECK(content.str() == again.out);
  std::remove(path.c_str());
}

TEST_CASE("verify suites") {
  const auto p = run({"verify", "partitions", "--seed", "1"});
  CHECK(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["passed"] == true);
  CHECK(j["suites"]["partitions"]["rows"][0]["equal"] == true);
  CHECK(run({"verify", "orthopoly"}).code == 0);
  const auto f1 = run({"verify", "fock", "--seed", "3"});
  const auto f2 = run({"verify", "fock", "--seed", "3"});
  CHECK(f1.code == 0);
  CHECK(f1.out == f2.out);
}

TEST_CASE("enumeration bound from the environment") {
  ::setenv("MONOCONV_ENUM_BOUND", "3", 1);
  const auto j = nlohmann::json::parse(run({"verify", "partitions"}).out);
  CHECK(j["suites"]["partitions"]["enumeration_bound"] == 3);
  CHECK(j["suites"]["partitions"]["rows"].size() == 16);
  const auto flag = nlohmann::json::parse(run({"verify", "partitions", "--enum-bound", "4"}).out);
  CHECK(flag["suites"]["partitions"]["enumeration_bound"] == 4);
  ::setenv("MONOCONV_ENUM_BOUND", "zero", 1);
  CHECK(run({"verify", "partitions"}).code == 2);
  ::unsetenv("MONOCONV_ENUM_BOUND");
}
