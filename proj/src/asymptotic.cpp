#include "unclosed/asymptotic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace unclosed {

namespace {

std::string float_string(const FieldElem& x, unsigned precision) {
  return field_embed(x, precision).re.to_string(static_cast<int>(precision));
}

nlohmann::json coefficient_json(const char* kind, int j, const FieldElem& x,
                                const std::string& rendered_float) {
  const SubfieldTag tag = subfield_of(x);
  nlohmann::json row = {{"kind", kind},
                        {"j", j},
                        {"subfield", to_string(tag)},
                        {"exact", render(x)},
                        {"value", to_json(x)},
                        {"float", rendered_float}};
  if (tag != SubfieldTag::Full) {
    row["p"] = rational_string(x.coord(0));
    row["q"] = rational_string(x.coord(2));
  }
  return row;
}

}  // namespace

PuiseuxSeries integrand_series(int max_order) {
  if (max_order < 1) throw std::invalid_argument("max order must be >= 1");
  const int t_order = 2 * max_order;
  PuiseuxSeries exponent = build_J_substituted(2 * max_order + 1, t_order);
  FieldElem shift = FieldElem::sqrt5();
  shift *= BigRational(-1, 24);
  exponent.add_to_term(2, VPoly(shift));
  return series_exp(exponent);
}

ExpansionResult compute_expansion(int max_order, unsigned precision) {
  if (max_order < 1) throw std::invalid_argument("compute_expansion: max order must be >= 1");
  if (precision < 1) throw std::invalid_argument("compute_expansion: precision must be >= 1");
  const PuiseuxSeries integrand = integrand_series(max_order);

  ExpansionResult r;
  r.max_order = max_order;
  r.precision = precision;
  r.b.push_back(FieldElem(1L));
  for (int j = 1; j <= max_order; ++j) {
    r.b.push_back(gaussian_integrate(integrand.term(2 * j)));
    r.odd_integrals.push_back(gaussian_integrate(integrand.term(2 * j - 1)));
  }

  PuiseuxSeries in_s(max_order);
  for (int j = 0; j <= max_order; ++j) in_s.set_term(j, VPoly(r.b[j]));
  const PuiseuxSeries log_series = series_log(in_s);
  for (int j = 0; j <= max_order; ++j) r.c.push_back(log_series.term(j).coeff(0));

  r.growth.push_back(0.0);
  for (int j = 0; j <= max_order; ++j) {
    r.b_float.push_back(float_string(r.b[j], precision));
    r.c_float.push_back(float_string(r.c[j], precision));
    if (j >= 1) {
      const BigFloat mag = field_embed(r.b[j], 30).abs();
      r.growth.push_back(mag.is_zero() ? 0.0 : std::exp(log(mag).to_double() / j));
    }
  }
  return r;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected json or csv)");
}

nlohmann::json expansion_to_json(const ExpansionResult& r) {
  nlohmann::json b = nlohmann::json::array();
  nlohmann::json c = nlohmann::json::array();
  nlohmann::json growth = nlohmann::json::array();
  for (int j = 0; j <= r.max_order; ++j) b.push_back(coefficient_json("b", j, r.b[j], r.b_float[j]));
  for (int j = 1; j <= r.max_order; ++j) {
    c.push_back(coefficient_json("c", j, r.c[j], r.c_float[j]));
    growth.push_back({{"j", j}, {"root", r.growth[j]}});
  }
  return {{"schema_version", 1}, {"kind", "expansion"}, {"max_order", r.max_order},
          {"precision", r.precision}, {"b", b}, {"c", c}, {"growth", growth}};
}

std::string render_expansion(const ExpansionResult& r, OutputFormat format) {
  const nlohmann::json j = expansion_to_json(r);
  if (format == OutputFormat::Json) return j.dump(2) + "\n";
  std::ostringstream os;
  os << "schema_version,kind,j,subfield,p,q,exact,float\n";
  for (const char* section : {"b", "c"}) {
    for (const auto& row : j.at(section)) {
      os << 1 << ',' << row.at("kind").get<std::string>() << ',' << row.at("j").get<int>() << ','
         << row.at("subfield").get<std::string>() << ',' << row.value("p", std::string()) << ','
         << row.value("q", std::string()) << ',' << row.at("exact").get<std::string>() << ','
         << row.at("float").get<std::string>() << '\n';
    }
  }
  return os.str();
}

}  // namespace unclosed
