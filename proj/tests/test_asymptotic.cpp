#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unclosed/asymptotic.hpp"
#include "unclosed/numeric_eval.hpp"

#include <sstream>

using namespace unclosed;

namespace {

const ExpansionResult& expansion12() {
  static const ExpansionResult r = compute_expansion(12, 30);
  return r;
}

std::vector<BigFloat> grid(std::initializer_list<const char*> xs) {
  std::vector<BigFloat> out;
  for (const char* x : xs) out.push_back(parse_real(x));
  return out;
}

}  // namespace

TEST_CASE("b_0 and b_1") {
  const ExpansionResult r = compute_expansion(1);
  CHECK(r.b.size() == 2);
  CHECK(r.b[0] == FieldElem(1L));
  CHECK(r.b[1] == FieldElem::sqrt5() * FieldElem(make_rational(1, 40)));
  CHECK(r.b[1] == field_inv(FieldElem::sqrt5() * FieldElem(8L)));
  CHECK(r.c[1] == r.b[1]);
  CHECK(r.b_float[1].rfind("5.590169943749474241", 0) == 0);
  CHECK_THROWS_AS(compute_expansion(0), std::invalid_argument);
}

TEST_CASE("b_j are real elements of Q(sqrt5) and odd integrals vanish") {
  const ExpansionResult& r = expansion12();
  for (const auto& b : r.b) {
    CHECK(b.is_real());
    CHECK(subfield_of(b) != SubfieldTag::Full);
  }
  for (const auto& c : r.c) CHECK(subfield_of(c) != SubfieldTag::Full);
  CHECK(r.odd_integrals.size() == 12);
  for (const auto& o : r.odd_integrals) CHECK(o.is_zero());
}

TEST_CASE("exp of the c-series reproduces the b-series") {
  const ExpansionResult& r = expansion12();
  PuiseuxSeries c_series(12);
  for (int j = 1; j <= 12; ++j) c_series.set_term(j, VPoly(r.c[j]));
  const PuiseuxSeries back = series_exp(c_series);
  for (int j = 0; j <= 12; ++j) CHECK(back.term(j) == VPoly(r.b[j]));
}

TEST_CASE("c_j nonzero for 2 <= j <= 12") {
  const ExpansionResult& r = expansion12();
  for (int j = 2; j <= 12; ++j) CHECK_FALSE(r.c[j].is_zero());
}

TEST_CASE("lower orders are stable under raising J") {
  const ExpansionResult small = compute_expansion(5);
  const ExpansionResult& big = expansion12();
  for (int j = 0; j <= 5; ++j) {
    CHECK(small.b[j] == big.b[j]);
    CHECK(small.c[j] == big.c[j]);
  }
}

TEST_CASE("determinism") {
  const ExpansionResult a = compute_expansion(8);
  const ExpansionResult b = compute_expansion(8);
  CHECK(a.b == b.b);
  CHECK(a.c == b.c);
  CHECK(render_expansion(a, OutputFormat::Json) == render_expansion(b, OutputFormat::Json));
}

TEST_CASE("b_2 and b_3 agree with numeric extraction from F") {
  const ExpansionResult r = compute_expansion(3);
  const auto g = grid({"0.1", "0.05", "0.025", "0.0125"});
  for (int j : {2, 3}) {
    const std::vector<FieldElem> lower(r.b.begin(), r.b.begin() + j);
    const CoefficientEstimate est = extract_coefficient(j, g, lower);
    const BigFloat exact = field_embed(r.b[j], 30).re;
    const BigFloat diff = abs(est.estimate - exact);
    CHECK(diff < exact * BigFloat(1e-4, 64));
    CHECK(diff < 10L * est.error + BigFloat(1e-12, 64));
    CHECK(est.consistent);
  }
}

TEST_CASE("rendering") {
  const ExpansionResult r = compute_expansion(1);
  const nlohmann::json j = nlohmann::json::parse(render_expansion(r, OutputFormat::Json));
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("b").size() == 2);
  CHECK(j.at("b")[1].at("q") == "1/40");
  CHECK(j.at("b")[1].at("p") == "0");
  CHECK(field_from_json(j.at("b")[1].at("value")) == r.b[1]);

  const std::string csv = render_expansion(r, OutputFormat::Csv);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "schema_version,kind,j,subfield,p,q,exact,float");
  int b_rows = 0;
  std::vector<std::string> floats;
  while (std::getline(lines, line)) {
    if (line.rfind("1,b,", 0) == 0) ++b_rows;
    floats.push_back(line.substr(line.rfind(',') + 1));
  }
  CHECK(b_rows == 2);
  // Same numeric content in both formats.
  std::vector<std::string> json_floats;
  for (const char* section : {"b", "c"})
    for (const auto& row : j.at(section)) json_floats.push_back(row.at("float"));
  CHECK(floats == json_floats);

  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("growth statistics") {
  const ExpansionResult& r = expansion12();
  CHECK(r.growth.size() == 13);
  CHECK(r.growth[1] == doctest::Approx(0.05590169943749474).epsilon(1e-12));
  for (int j = 9; j <= 12; ++j) CHECK(r.growth[j] > r.growth[j - 1]);
}
