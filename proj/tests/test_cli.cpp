#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unclosed/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace unclosed;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

double rel_err_at(const std::string& s) {
  const Run r = run({"eval", "--s", s, "--order", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  return std::stod(j.at("reports")[0].at("rel_err").get<std::string>());
}

}  // namespace

TEST_CASE("coeffs") {
  const Run r = run({"coeffs", "--max-order", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("kind") == "expansion");
  CHECK(j.at("b").size() == 2);
  CHECK(j.at("b")[1].at("q") == "1/40");
  CHECK(j.at("b")[1].at("subfield") == "SQRT5");

  CHECK(run({"coeffs", "--max-order", "0"}).code == kExitConfig);
  CHECK(run({"coeffs", "--max-order", "25"}).code == kExitConfig);
  CHECK(run({"coeffs", "--format", "xml"}).code == kExitConfig);

  const Run csv = run({"coeffs", "--max-order", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("schema_version,kind,j,subfield,p,q,exact,float\n", 0) == 0);
  CHECK(csv.out.find("1,b,2,RATIONAL,69/3200,0,") != std::string::npos);
}

TEST_CASE("eval") {
  CHECK(run({"eval", "--s", "10"}).code == kExitConfig);
  CHECK(run({"eval", "--s", "0"}).code == kExitConfig);
  CHECK(run({"eval", "--s", "-0.1"}).code == kExitConfig);
  CHECK(run({"eval", "--s", "abc"}).code == kExitConfig);
  CHECK(run({"eval"}).code == kExitConfig);

  const Run a = run({"eval", "--s", "0.1", "--order", "2"});
  const Run b = run({"eval", "--s", "0.1", "--order", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  // Truncation after b_2 leaves an O(s^3) error.
  const double ratio = rel_err_at("0.1") / rel_err_at("0.05");
  CHECK(ratio > 4.0);
  CHECK(ratio < 16.0);

  // Several s values come back sorted.
  const Run many = run({"eval", "--s", "0.2", "--s", "0.05", "--s", "0.1", "--format", "csv", "--precision", "10"});
  REQUIRE(many.code == 0);
  std::istringstream lines(many.out);
  std::string line;
  std::vector<std::string> s_col;
  std::getline(lines, line);
  while (std::getline(lines, line)) s_col.push_back(line.substr(2, line.find(',', 2) - 2));
  CHECK(s_col == std::vector<std::string>{"5.000000000e-02", "1.000000000e-01", "2.000000000e-01"});
}

TEST_CASE("verify") {
  const Run ct = run({"verify", "--suite", "constant-term"});
  CHECK(ct.code == 0);
  const auto j = nlohmann::json::parse(ct.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("detail").at("M_max") == 20);

  for (const auto& name : suite_names()) {
    const Run r = run({"verify", "--suite", name});
    CHECK_MESSAGE(r.code == 0, name);
    CHECK(nlohmann::json::parse(r.out).at("suite") == name);
  }
  CHECK(run({"verify", "--suite", "nope"}).code == kExitConfig);
  CHECK(run({"verify"}).code == kExitConfig);
  CHECK_THROWS(run_suite("nope"));
}

TEST_CASE("report") {
  const Run r = run({"report"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass") == true);
  REQUIRE(j.at("criteria").size() == 10);
  for (int k = 0; k < 10; ++k) {
    CHECK(j.at("criteria")[k].at("id") == "AC-" + std::to_string(k + 1));
    CHECK(j.at("criteria")[k].at("pass") == true);
  }
}

TEST_CASE("diverge and tables") {
  const Run d = run({"diverge", "--max-order", "8", "--ebar-max", "30"});
  REQUIRE(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j.at("ebar_fit").at("K").get<double>() < 1.0);
  CHECK(j.at("b_growth").at("roots").size() == 8);
  CHECK(run({"diverge", "--max-order", "5"}).code == kExitConfig);
  CHECK(run({"diverge", "--ebar-max", "65"}).code == kExitConfig);

  const Run t = run({"tables", "--max-order", "4"});
  REQUIRE(t.code == 0);
  const auto tj = nlohmann::json::parse(t.out);
  CHECK(tj.at("E")[2].at("exact") == "0 + 8·√5");
  CHECK(tj.at("bernoulli")[2].at("value") == "1/6");
  CHECK(tj.at("eulerian")[3].at("row") == nlohmann::json::array({"1", "4", "1"}));
  CHECK(run({"tables", "--max-order", "4", "--format", "csv"}).out.find("1,E,1,,RATIONAL,4\n") != std::string::npos);
}

TEST_CASE("output file and usage errors") {
  const auto path = std::filesystem::temp_directory_path() / "unclosed_cli_test.json";
  std::filesystem::remove(path);
  const Run r = run({"coeffs", "--max-order", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == run({"coeffs", "--max-order", "1"}).out);
  std::filesystem::remove(path);

  CHECK(run({"coeffs", "--out", "/nonexistent-dir/x.json"}).code == kExitConfig);
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"frobnicate"}).code == kExitConfig);
  CHECK(run({"--help"}).code == 0);
}
