// Exact coefficients of R(s) = F(e^{-s}) sqrt(2 pi sqrt5 / s) exp(-pi^2/(5s)):
//
//   R(s) ~ 1 + sum_j b_j s^j = exp(sum_j c_j s^j).
#pragma once

#include "unclosed/exact_field.hpp"
#include "unclosed/series.hpp"

#include <string>
#include <vector>

namespace unclosed {

struct ExpansionResult {
  int max_order = 0;
  unsigned precision = 0;
  /// b[0] = 1, b[1], ..., b[max_order].
  std::vector<FieldElem> b;
  /// c[0] = 0 (log of the constant 1), c[1] = b[1], ..., c[max_order].
  std::vector<FieldElem> c;
  /// Gaussian integral of the odd-power coefficients t^1, t^3, ..., t^(2J-1);
  /// these vanish exactly.
  std::vector<FieldElem> odd_integrals;
  std::vector<std::string> b_float;
  std::vector<std::string> c_float;
  /// growth[j] = |b_j|^(1/j) for j >= 1; growth[0] is unused and set to 0.
  std::vector<double> growth;
};

/// The integrand series exp(J_{2J+1}(s, .) - sqrt5 t^2 / 24) truncated at t^(2J).
PuiseuxSeries integrand_series(int max_order);

/// b_1..b_J from the Gaussian integral of the even t-coefficients, and c_j by
/// formal logarithm. Throws std::invalid_argument when max_order < 1.
ExpansionResult compute_expansion(int max_order, unsigned precision = 30);

enum class OutputFormat { Json, Csv };

OutputFormat parse_format(const std::string& name);

/// Deterministic JSON or CSV with exact and floating values.
std::string render_expansion(const ExpansionResult& r, OutputFormat format);

nlohmann::json expansion_to_json(const ExpansionResult& r);

}  // namespace unclosed
