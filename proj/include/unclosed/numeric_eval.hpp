// High-precision evaluation of
//   F(q) = sum_{m>=0} q^{m(m+1)/2} / (q;q)_m^2,   q = e^{-s},
// the normalized remainder R(s), and the numeric checks that back the exact
// expansion: coefficient extraction, the constant-term identity, the
// log-Pochhammer expansion and the minor-arc bound.
#pragma once

#include "unclosed/bigfloat.hpp"
#include "unclosed/exact_field.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unclosed {

struct PrecisionContext {
  unsigned digits = 50;
  unsigned guard = 20;

  /// Throws std::invalid_argument when digits < 30.
  explicit PrecisionContext(unsigned digits = 50, unsigned guard = 20);
  Bits bits() const { return bits_for_digits(digits + guard); }
};

class PrecisionPolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precision at which decimal s-values are parsed.
inline constexpr unsigned kParseDigits = 400;

/// Parses a decimal s-value at kParseDigits.
BigFloat parse_real(const std::string& text);

/// ceil(pi^2 / (5 s) / ln 10) + 40 + output_digits.
unsigned required_digits(const BigFloat& s, unsigned output_digits = 0);

/// Context satisfying the precision policy for s with output_digits to spare.
PrecisionContext context_for(const BigFloat& s, unsigned output_digits);

/// (z; q)_m = prod_{n=0}^{m-1} (1 - z q^n). With m = nullopt the product runs
/// until |z q^n| < 10^-(digits + guard). Requires 0 < q < 1.
Complex pochhammer_q(const Complex& z, const BigFloat& q, std::optional<long> m,
                     const PrecisionContext& ctx);

struct FSum {
  BigFloat value;
  long terms_used = 0;
};

/// Sum of the (positive) series for F(e^{-s}). Throws PrecisionPolicyError
/// when ctx.digits is below required_digits(s).
FSum F_direct_sum(const BigFloat& s, const PrecisionContext& ctx);
BigFloat F_direct(const BigFloat& s, const PrecisionContext& ctx);

/// F(e^{-s}) sqrt(2 pi sqrt5 / s) exp(-pi^2/(5s)).
BigFloat R_numeric(const BigFloat& s, const PrecisionContext& ctx);

/// 1 + sum_{j=1}^{order} b_j s^j with b = {b_0, b_1, ...}.
BigFloat asymptotic_value(const std::vector<FieldElem>& b, int order, const BigFloat& s, Bits prec);

struct EvalReport {
  BigFloat s;
  BigFloat F_value;
  BigFloat R_numeric;
  int truncation_order = 0;
  BigFloat asymptotic_value;
  BigFloat abs_err;
  BigFloat rel_err;
  long terms_used = 0;
  unsigned digits_used = 0;
};

/// Evaluates R(s) and compares with the truncated expansion. Precision
/// follows the policy with output_digits on top.
EvalReport evaluate(const BigFloat& s, const std::vector<FieldElem>& b, int order,
                    unsigned output_digits = 30);

/// One report per s, computed in parallel, returned in input order.
std::vector<EvalReport> evaluate_many(const std::vector<BigFloat>& s_values,
                                      const std::vector<FieldElem>& b, int order,
                                      unsigned output_digits = 30);

nlohmann::json to_json(const EvalReport& r, unsigned output_digits);
/// Columns: schema_version,s,R_numeric,asymptotic,abs_err,rel_err,order,terms_used
std::string eval_csv(const std::vector<EvalReport>& reports, unsigned output_digits);

struct CoefficientEstimate {
  int j = 0;
  BigFloat estimate;
  BigFloat error;
  /// (R(s) - sum_{i<j} b_i s^i) / s^j at each grid point.
  std::vector<BigFloat> raw;
  bool consistent = true;
  std::string warning;
};

/// Numeric estimate of b_j from R on a descending grid, with the exact lower
/// coefficients b_0..b_{j-1} subtracted and polynomial extrapolation to s = 0.
/// The error is the change when the largest s is dropped from the fit.
CoefficientEstimate extract_coefficient(int j, const std::vector<BigFloat>& s_grid,
                                        const std::vector<FieldElem>& lower_b,
                                        unsigned output_digits = 30);

struct ConstantTermReport {
  int M = 0;
  bool pass = false;
  /// q-power of the first mismatch, or -1.
  int first_mismatch = -1;
  /// Odd powers of q^(1/2) vanish in the z^0 coefficient.
  bool half_powers_vanish = false;
  std::vector<BigInt> direct;
  std::vector<BigInt> constant_term;
};

/// Compares the q-series of F through q^M with [z^0] S(z,q) R(1/z,q), where
/// S and R are expanded from their product forms 1/(z q^(1/2); q)_inf and
/// (-z q^(1/2); q)_inf. Requires 0 <= M <= 30.
ConstantTermReport constant_term_check(int M);

/// Integer coefficients of F(q) through q^M.
std::vector<BigInt> f_series(int M);

enum class PolylogArg { PhiInverse, MinusPhi };

const char* to_string(PolylogArg w);
FieldElem exact_value(PolylogArg w);

/// Li_2(w) at the two golden arguments.
BigFloat li2(PolylogArg w, Bits prec);
/// Li_1(w) = -log(1 - w).
BigFloat li1(PolylogArg w, Bits prec);

struct LogPochRow {
  BigFloat s;
  Complex direct;
  Complex truncated;
  BigFloat error;
};

struct LogPochReport {
  PolylogArg w = PolylogArg::PhiInverse;
  BigFloat v;
  int N = 0;
  int sign = 1;
  std::vector<LogPochRow> rows;
  /// error(s_k) / error(s_{k+1}) for consecutive grid points.
  std::vector<double> ratios;
};

/// Compares log (w e^{-s(1/2 + sign i v)}; e^{-s})_inf with
///   sum_{k=-1}^{N} Li_{1-k}(w) (-s)^k B_{k+1}(1/2 + sign i v) / (k+1)!.
/// Requires every s in (0, 0.2].
LogPochReport log_poch_check(PolylogArg w, const BigFloat& v, int N,
                             const std::vector<BigFloat>& s_grid, int sign = 1,
                             unsigned digits = 50);

struct MinorArcSample {
  BigFloat s;
  double fraction = 0;  // position between the arc boundary and pi/s
  BigFloat v;
  BigFloat log_ratio;
  BigFloat log_bound;
  double ratio_over_bound = 0;
};

struct MinorArcReport {
  std::vector<MinorArcSample> samples;
  /// Smallest C with ratio <= C * bound on every arc sample.
  double fitted_C = 0;
  double C_limit = 10;
  bool pass = false;
  /// ratio/bound at the endpoint v = pi/s, per s.
  std::vector<double> endpoint_ratio;
  /// ratio/bound at v = s^(2/3), the hypothesis as literally stated in the
  /// lemma. Recorded only.
  std::vector<double> literal_hypothesis_ratio;
};

/// |(-phi e^{-s(iv+1/2)}; e^{-s})_inf / (phi^{-1} e^{-s(-iv+1/2)}; e^{-s})_inf|
/// against exp(pi^2/(5s) - sqrt5/(2 s^(1/3))) for v from s^(-2/3) to pi/s.
MinorArcReport minor_arc_check(const std::vector<BigFloat>& s_grid,
                               const std::vector<double>& fractions, unsigned digits = 40);

}  // namespace unclosed
