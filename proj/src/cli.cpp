#include "unclosed/cli.hpp"

#include "unclosed/asymptotic.hpp"
#include "unclosed/divergence.hpp"
#include "unclosed/numeric_eval.hpp"
#include "unclosed/parallel.hpp"
#include "unclosed/special_sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace unclosed {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<BigFloat> parse_grid(std::initializer_list<const char*> values) {
  std::vector<BigFloat> out;
  for (const char* v : values) out.push_back(parse_real(v));
  return out;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

FieldElem b1_exact() {
  FieldElem b1 = FieldElem::sqrt5();
  b1 *= BigRational(1, 40);
  return b1;
}

// ---- suites -------------------------------------------------------------

SuiteResult suite_b1() {
  const ExpansionResult r = compute_expansion(1);
  const FieldElem expected = b1_exact();
  const bool exact = r.b.at(1) == expected;
  const CoefficientEstimate est = extract_coefficient(1, parse_grid({"0.1", "0.05", "0.025"}), {r.b[0]});
  const BigFloat b1f = field_embed(expected, 40).re;
  const double rel = (abs(est.estimate - b1f) / b1f).to_double();
  SuiteResult out{"b1", exact && rel < 0.1, {}};
  out.detail = {{"exact", render(r.b[1])},
                {"exact_match", exact},
                {"numeric_estimate", est.estimate.to_string(12)},
                {"numeric_error", est.error.to_string(3)},
                {"numeric_rel_diff", rel},
                {"warning", est.warning}};
  return out;
}

struct ScalingData {
  std::vector<std::string> s;
  // quotient[J-1][k] = |R(s_k) - sum_{j<=J} b_j s_k^j| / s_k^(J+1)
  std::vector<std::vector<double>> quotient;
  std::vector<double> r_minus_one;
  unsigned max_digits = 0;
};

ScalingData scaling_data(int max_j, const std::vector<BigFloat>& grid) {
  const ExpansionResult r = compute_expansion(max_j);
  const std::vector<EvalReport> reps = evaluate_many(grid, r.b, max_j, 30);
  ScalingData d;
  d.quotient.assign(static_cast<size_t>(max_j), {});
  for (size_t k = 0; k < grid.size(); ++k) {
    const BigFloat& s = grid[k];
    const Bits prec = reps[k].R_numeric.precision();
    d.s.push_back(s.to_string(4));
    d.r_minus_one.push_back(abs(reps[k].R_numeric - 1L).to_double());
    d.max_digits = std::max(d.max_digits, reps[k].digits_used);
    for (int J = 1; J <= max_j; ++J) {
      const BigFloat res = abs(reps[k].R_numeric - asymptotic_value(r.b, J, s, prec));
      d.quotient[J - 1].push_back((res / pow(s.rounded_to(prec), static_cast<long>(J) + 1)).to_double());
    }
  }
  return d;
}

double spread(const std::vector<double>& xs, size_t count) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.begin() + static_cast<long>(count));
  return *hi / *lo;
}

SuiteResult suite_scaling() {
  const ScalingData d = scaling_data(3, parse_grid({"0.2", "0.1", "0.05", "0.025"}));
  bool pass = true;
  nlohmann::json orders = nlohmann::json::array();
  for (int J = 1; J <= 3; ++J) {
    const auto& q = d.quotient[J - 1];
    std::vector<double> halving;
    bool ok = true;
    for (size_t k = 0; k + 1 < q.size(); ++k) {
      halving.push_back(q[k] / q[k + 1]);
      ok = ok && halving.back() >= 0.25 && halving.back() <= 4.0;
    }
    pass = pass && ok;
    orders.push_back({{"J", J}, {"quotient", q}, {"halving_ratio", halving}, {"pass", ok}});
  }
  const bool monotone = d.r_minus_one[0] > d.r_minus_one[1] && d.r_minus_one[1] > d.r_minus_one[2];
  pass = pass && monotone;
  return {"scaling", pass,
          {{"s", d.s}, {"orders", orders}, {"R_minus_one", d.r_minus_one}, {"R_to_one_monotone", monotone},
           {"max_digits", d.max_digits}}};
}

SuiteResult suite_constant_term() {
  bool pass = true;
  int first_bad_m = -1;
  for (int M = 0; M <= 20; ++M) {
    const ConstantTermReport rep = constant_term_check(M);
    if (!rep.pass && pass) {
      pass = false;
      first_bad_m = M;
    }
  }
  const ConstantTermReport top = constant_term_check(20);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : top.direct) coeffs.push_back(c.get_str());
  return {"constant-term", pass,
          {{"M_max", 20},
           {"first_failing_M", first_bad_m},
           {"half_powers_vanish", top.half_powers_vanish},
           {"coefficients", coeffs}}};
}

SuiteResult suite_minor_arc() {
  const MinorArcReport rep = minor_arc_check(parse_grid({"0.05", "0.02"}), {0.0, 0.25, 0.5, 0.75, 1.0});
  bool endpoint_small = true;
  for (double e : rep.endpoint_ratio) endpoint_small = endpoint_small && e < 1e-6;
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& sm : rep.samples)
    samples.push_back({{"s", sm.s.to_string(4)},
                       {"fraction", sm.fraction},
                       {"v", sm.v.to_string(8)},
                       {"log_ratio", sm.log_ratio.to_string(12)},
                       {"log_bound", sm.log_bound.to_string(12)},
                       {"ratio_over_bound", sm.ratio_over_bound}});
  return {"minor-arc", rep.pass && endpoint_small,
          {{"fitted_C", rep.fitted_C},
           {"C_limit", rep.C_limit},
           {"endpoint_ratio", rep.endpoint_ratio},
           {"literal_hypothesis_ratio", rep.literal_hypothesis_ratio},
           {"samples", samples}}};
}

nlohmann::json logpoch_json(const LogPochReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rep.rows)
    rows.push_back({{"s", row.s.to_string(4)},
                    {"direct_re", row.direct.re.to_string(20)},
                    {"direct_im", row.direct.im.to_string(20)},
                    {"truncated_re", row.truncated.re.to_string(20)},
                    {"truncated_im", row.truncated.im.to_string(20)},
                    {"error", row.error.to_string(6)}});
  return {{"w", to_string(rep.w)}, {"v", rep.v.to_string(6)}, {"N", rep.N}, {"rows", rows}, {"ratios", rep.ratios}};
}

SuiteResult suite_logpoch() {
  const auto grid = parse_grid({"0.1", "0.05"});
  const BigFloat v0 = parse_real("0");
  const LogPochReport n2 = log_poch_check(PolylogArg::PhiInverse, v0, 2, grid);
  const LogPochReport n4 = log_poch_check(PolylogArg::PhiInverse, v0, 4, grid);
  const LogPochReport other = log_poch_check(PolylogArg::MinusPhi, v0, 2, grid);
  const double ratio = n2.ratios.at(0);
  const double rel_at_01 = (n2.rows[0].error / n2.rows[0].direct.abs()).to_double();
  const bool ratio_ok = ratio >= 4.0 && ratio <= 16.0;
  const bool agree_ok = rel_at_01 < 5e-5;
  const bool refine_ok = n4.rows[0].error < n2.rows[0].error;
  return {"logpoch", ratio_ok && agree_ok && refine_ok,
          {{"ratio_N2", ratio},
           {"ratio_in_range", ratio_ok},
           {"relative_error_s01", rel_at_01},
           {"error_N4_below_N2", refine_ok},
           {"phi_inverse_N2", logpoch_json(n2)},
           {"phi_inverse_N4", logpoch_json(n4)},
           {"minus_phi_N2", logpoch_json(other)}}};
}

const std::vector<std::pair<std::string, std::function<SuiteResult()>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult()>>> table = {
      {"b1", suite_b1},
      {"constant-term", suite_constant_term},
      {"logpoch", suite_logpoch},
      {"minor-arc", suite_minor_arc},
      {"scaling", suite_scaling},
  };
  return table;
}

// ---- output -------------------------------------------------------------

struct Sink {
  std::string path;
  std::ostream& out;
};

int emit(const Sink& sink, const std::string& text, std::ostream& err) {
  if (sink.path.empty()) {
    sink.out << text;
    return kExitOk;
  }
  std::ofstream f(sink.path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << sink.path << "'\n";
    return kExitConfig;
  }
  f << text;
  return f ? kExitOk : kExitConfig;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---- subcommands --------------------------------------------------------

int cmd_coeffs(int max_order, unsigned precision, const std::string& format, const Sink& sink,
               std::ostream& err) {
  const ExpansionResult r = compute_expansion(max_order, precision);
  return emit(sink, render_expansion(r, parse_format(format)), err);
}

int cmd_eval(const std::vector<std::string>& s_text, int order, unsigned precision, const std::string& format,
             const Sink& sink, std::ostream& err) {
  std::vector<BigFloat> s_values;
  for (const auto& t : s_text) {
    BigFloat s = parse_real(t);
    if (!(s > 0L) || s > 5L) {
      err << "error: --s " << t << " is outside (0, 5]\n";
      return kExitConfig;
    }
    s_values.push_back(std::move(s));
  }
  std::stable_sort(s_values.begin(), s_values.end(), [](const BigFloat& a, const BigFloat& b) { return a < b; });
  const ExpansionResult r = compute_expansion(std::max(order, 1), precision);
  const std::vector<EvalReport> reps = evaluate_many(s_values, r.b, order, precision);
  if (parse_format(format) == OutputFormat::Csv) return emit(sink, eval_csv(reps, precision), err);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rep : reps) rows.push_back(to_json(rep, precision));
  return emit(sink, dump({{"schema_version", 1}, {"kind", "eval"}, {"order", order}, {"reports", rows}}), err);
}

int cmd_verify(const std::string& name, const Sink& sink, std::ostream& err) {
  const SuiteResult res = run_suite(name);
  const int rc = emit(sink,
                      dump({{"schema_version", 1},
                            {"kind", "verify"},
                            {"suite", res.name},
                            {"pass", res.pass},
                            {"detail", res.detail}}),
                      err);
  if (rc != kExitOk) return rc;
  return res.pass ? kExitOk : kExitFailure;
}

int cmd_diverge(int max_order, int ebar_max, const std::string& format, const Sink& sink, std::ostream& err) {
  const ExpansionResult r = compute_expansion(max_order);
  const GrowthReport g = growth_report(r, ebar_max);
  if (parse_format(format) == OutputFormat::Csv) return emit(sink, growth_csv(g), err);
  return emit(sink, dump(to_json(g)), err);
}

int cmd_report(const std::string& format, const Sink& sink, std::ostream& err) {
  const std::vector<CriterionResult> crit = run_criteria();
  bool all = true;
  for (const auto& c : crit) all = all && c.pass;
  int rc;
  if (parse_format(format) == OutputFormat::Csv) {
    std::ostringstream os;
    os << "schema_version,id,pass,title,detail\n";
    for (const auto& c : crit)
      os << 1 << ',' << c.id << ',' << (c.pass ? "pass" : "fail") << ",\"" << c.title << "\",\"" << c.detail
         << "\"\n";
    rc = emit(sink, os.str(), err);
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : crit)
      rows.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
    rc = emit(sink, dump({{"schema_version", 1}, {"kind", "report"}, {"pass", all}, {"criteria", rows}}), err);
  }
  if (rc != kExitOk) return rc;
  return all ? kExitOk : kExitFailure;
}

int cmd_tables(int max_order, const std::string& format, const Sink& sink, std::ostream& err) {
  const SequenceTables tables(std::max(max_order, 1));
  const std::vector<BigRational> bern = bernoulli_numbers(max_order);
  if (parse_format(format) == OutputFormat::Csv) {
    std::ostringstream os;
    os << "schema_version,kind,n,k,subfield,value\n";
    for (int n = 0; n <= max_order; ++n)
      os << 1 << ",E," << n << ",," << to_string(subfield_of(tables.en(n))) << ',' << render(tables.en(n)) << '\n';
    for (int n = 0; n <= max_order; ++n)
      os << 1 << ",B," << n << ",,RATIONAL," << rational_string(bern[n]) << '\n';
    for (int n = 0; n <= max_order; ++n) {
      const auto& row = tables.eulerian_row(n);
      for (size_t k = 0; k < row.size(); ++k) os << 1 << ",A," << n << ',' << k << ",RATIONAL," << row[k].get_str() << '\n';
    }
    return emit(sink, os.str(), err);
  }
  nlohmann::json en = nlohmann::json::array();
  nlohmann::json bj = nlohmann::json::array();
  nlohmann::json eul = nlohmann::json::array();
  for (int n = 0; n <= max_order; ++n) {
    const FieldElem& e = tables.en(n);
    en.push_back({{"n", n}, {"subfield", to_string(subfield_of(e))}, {"exact", render(e)}, {"value", to_json(e)}});
    bj.push_back({{"n", n}, {"value", rational_string(bern[n])}});
    nlohmann::json row = nlohmann::json::array();
    for (const auto& a : tables.eulerian_row(n)) row.push_back(a.get_str());
    eul.push_back({{"n", n}, {"row", row}});
  }
  return emit(sink,
              dump({{"schema_version", 1},
                    {"kind", "tables"},
                    {"max_order", max_order},
                    {"E", en},
                    {"bernoulli", bj},
                    {"eulerian", eul}}),
              err);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& [n, fn] : suites())
    if (n == name) return fn();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<CriterionResult> run_criteria() {
  std::vector<CriterionResult> out;

  {
    const auto start = Clock::now();
    const ExpansionResult r = compute_expansion(1);
    const double t = seconds_since(start);
    const bool ok = r.b.at(1) == b1_exact() && t < 1.0;
    out.push_back({"AC-1", "exact b_1 = sqrt5/40", ok, "b_1 = " + render(r.b[1]) + ", " + fmt(t) + " s"});
  }
  {
    const auto start = Clock::now();
    FieldElem e2 = FieldElem::sqrt5();
    e2 *= BigRational(8);
    const bool ok = en_value(0) == FieldElem::sqrt5() && en_value(1) == FieldElem(4L) && en_value(2) == e2;
    const double t = seconds_since(start);
    out.push_back({"AC-2", "E_0 = sqrt5, E_1 = 4, E_2 = 8 sqrt5", ok && t < 1.0,
                   "E_0 = " + render(en_value(0)) + ", E_1 = " + render(en_value(1)) +
                       ", E_2 = " + render(en_value(2))});
  }
  {
    const FieldElem m4 = gaussian_integrate(VPoly::monomial(FieldElem(1L), 4));
    const FieldElem m6 = gaussian_integrate(VPoly::monomial(FieldElem(1L), 6));
    out.push_back({"AC-3", "Gaussian moments of v^4 and v^6", m4 == FieldElem(3L) && m6 == FieldElem(15L),
                   "v^4 -> " + render(m4) + ", v^6 -> " + render(m6)});
  }
  {
    const auto start = Clock::now();
    const ScalingData d = scaling_data(2, parse_grid({"0.2", "0.1", "0.05"}));
    const double t = seconds_since(start);
    const double s1 = spread(d.quotient[0], 3);
    const double s2 = spread(d.quotient[1], 3);
    const bool ok = s1 <= 4.0 && s2 <= 4.0 && d.max_digits <= 300 && t < 120.0;
    out.push_back({"AC-4", "numeric residuals scale as s^2 and s^3", ok,
                   "max/min of residual/s^2 = " + fmt(s1) + ", of residual/s^3 = " + fmt(s2) +
                       ", digits <= " + std::to_string(d.max_digits) + ", " + fmt(t) + " s"});
  }
  {
    const auto start = Clock::now();
    const SuiteResult res = suite_constant_term();
    const double t = seconds_since(start);
    out.push_back({"AC-5", "constant-term identity through q^20", res.pass && t < 60.0,
                   "first failing M = " + std::to_string(res.detail.at("first_failing_M").get<int>()) + ", " +
                       fmt(t) + " s"});
  }
  {
    const LogPochReport rep =
        log_poch_check(PolylogArg::PhiInverse, parse_real("0"), 2, parse_grid({"0.1", "0.05"}));
    const double ratio = rep.ratios.at(0);
    out.push_back({"AC-6", "log-Pochhammer truncation error ratio", ratio >= 4.0 && ratio <= 16.0,
                   "error(0.1)/error(0.05) = " + fmt(ratio)});
  }
  {
    std::vector<BigFloat> e = parallel_map(31, [](size_t n) { return ebar(static_cast<int>(n)); });
    const double err12 = abs(e[12] - 1L).to_double();
    const EbarFit fit = fit_ebar_rate(e, 5, 30);
    out.push_back({"AC-7", "Ebar_n -> 1 geometrically", err12 < 1e-3 && fit.K < 1.0,
                   "|Ebar_12 - 1| = " + fmt(err12) + ", K = " + fmt(fit.K) + ", Ebar_1 = " +
                       e[1].to_string(6) + ", Ebar_2 = " + e[2].to_string(6)});
  }
  const ExpansionResult r12 = compute_expansion(12);
  {
    const BGrowth g = b_growth(r12);
    bool c_nonzero = true;
    for (int j = 2; j <= 12; ++j) c_nonzero = c_nonzero && !r12.c[j].is_zero();
    std::string tail;
    for (size_t k = g.roots.size() - 4; k < g.roots.size(); ++k) tail += (tail.empty() ? "" : ", ") + fmt(g.roots[k]);
    out.push_back({"AC-8", "divergence witness at J = 12", g.tail_increasing && c_nonzero,
                   "last roots " + tail + "; c_2..c_12 nonzero: " + (c_nonzero ? "yes" : "no")});
  }
  {
    const BbarTable table(42);
    const double e10 = partial_exp_error(10, table);
    const double e20 = partial_exp_error(20, table);
    const double e40 = partial_exp_error(40, table);
    out.push_back({"AC-9", "partial exponential limit on [-2, 2]", e10 > e20 && e20 > e40 && e40 < 1e-5,
                   "max error k=10: " + fmt(e10) + ", k=20: " + fmt(e20) + ", k=40: " + fmt(e40)});
  }
  {
    bool real = true;
    for (const auto& b : r12.b) real = real && b.is_real() && subfield_of(b) != SubfieldTag::Full;
    bool odd = true;
    for (const auto& o : r12.odd_integrals) odd = odd && o.is_zero();
    out.push_back({"AC-10", "b_j real in Q(sqrt5), odd integrals vanish", real && odd,
                   std::string("b_j in Q(sqrt5): ") + (real ? "yes" : "no") + "; odd integrals zero: " +
                       (odd ? "yes" : "no")});
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric asymptotics of F(q) = sum q^(m(m+1)/2)/(q;q)_m^2 as q -> 1", "unclosed"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  int max_order = 12;
  unsigned precision = 30;
  std::vector<std::string> s_values;
  int order = 2;
  std::string suite;
  int ebar_max = 30;

  const auto formats = CLI::IsMember({"json", "csv"});
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output to this file instead of standard output");
    sub->add_option("--format", format, "json or csv")->check(formats)->capture_default_str();
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "Exact b_j and c_j");
  coeffs->add_option("--max-order", max_order, "Highest order J")->check(CLI::Range(1, 24))->capture_default_str();
  coeffs->add_option("--precision", precision, "Digits in float renderings")
      ->check(CLI::Range(1u, 1000u))
      ->capture_default_str();
  add_common(coeffs);

  CLI::App* eval = app.add_subcommand("eval", "Compare R(s) with the truncated expansion");
  eval->add_option("--s", s_values, "Value of s in (0, 5]; repeatable")->required()->take_all();
  eval->add_option("--order", order, "Truncation order J")->check(CLI::Range(0, 24))->capture_default_str();
  eval->add_option("--precision", precision, "Output digits")->check(CLI::Range(1u, 1000u))->capture_default_str();
  add_common(eval);

  CLI::App* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--out", out_path, "Write output to this file instead of standard output");
  verify->add_option("--format", format, "json")->check(CLI::IsMember({"json"}))->capture_default_str();

  CLI::App* diverge = app.add_subcommand("diverge", "Divergence diagnostics");
  diverge->add_option("--max-order", max_order, "Order J for b_j growth")
      ->check(CLI::Range(6, 24))
      ->capture_default_str();
  diverge->add_option("--ebar-max", ebar_max, "Largest n for Ebar_n")->check(CLI::Range(6, 64))->capture_default_str();
  add_common(diverge);

  CLI::App* report = app.add_subcommand("report", "Evaluate every acceptance criterion");
  add_common(report);

  CLI::App* tables = app.add_subcommand("tables", "Dump E_n, Bernoulli numbers and Eulerian rows");
  tables->add_option("--max-order", max_order, "Largest index")->check(CLI::Range(0, 64))->capture_default_str();
  add_common(tables);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const Sink sink{out_path, out};
  try {
    if (*coeffs) return cmd_coeffs(max_order, precision, format, sink, err);
    if (*eval) return cmd_eval(s_values, order, precision, format, sink, err);
    if (*verify) return cmd_verify(suite, sink, err);
    if (*diverge) return cmd_diverge(max_order, ebar_max, format, sink, err);
    if (*report) return cmd_report(format, sink, err);
    if (*tables) return cmd_tables(max_order, format, sink, err);
  } catch (const PrecisionPolicyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace unclosed
