#include "unclosed/numeric_eval.hpp"

#include "unclosed/parallel.hpp"
#include "unclosed/special_sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace unclosed {

namespace {

constexpr long kMaxTerms = 50'000'000;

BigFloat pow10_neg(unsigned digits, Bits prec) { return pow(BigFloat(10L, prec), -static_cast<long>(digits)); }

void require_positive(const BigFloat& s, const char* what) {
  if (!(s > 0L)) throw std::invalid_argument(std::string(what) + ": s must be positive");
}

BigFloat phi_value(Bits prec) { return (sqrt(BigFloat(5L, prec)) + 1L) / 2L; }

// P(0) for the interpolating polynomial through (x_k, y_k), Neville's scheme.
BigFloat neville_at_zero(const std::vector<BigFloat>& x, const std::vector<BigFloat>& y) {
  std::vector<BigFloat> p = y;
  const size_t n = x.size();
  for (size_t k = 1; k < n; ++k)
    for (size_t i = 0; i + k < n; ++i)
      p[i] = (x[i] * p[i + 1] - x[i + k] * p[i]) / (x[i] - x[i + k]);
  return p[0];
}

}  // namespace

PrecisionContext::PrecisionContext(unsigned digits_, unsigned guard_) : digits(digits_), guard(guard_) {
  if (digits < 30) throw std::invalid_argument("PrecisionContext: digits must be >= 30");
}

BigFloat parse_real(const std::string& text) { return BigFloat::parse(text, bits_for_digits(kParseDigits)); }

unsigned required_digits(const BigFloat& s, unsigned output_digits) {
  require_positive(s, "required_digits");
  const double leading = M_PI * M_PI / (5.0 * s.to_double()) / std::log(10.0);
  if (!std::isfinite(leading) || leading > 1e6)
    throw PrecisionPolicyError("s too small for the precision policy");
  return static_cast<unsigned>(std::ceil(leading)) + 40 + output_digits;
}

PrecisionContext context_for(const BigFloat& s, unsigned output_digits) {
  return PrecisionContext(required_digits(s, output_digits));
}

Complex pochhammer_q(const Complex& z, const BigFloat& q, std::optional<long> m,
                     const PrecisionContext& ctx) {
  if (!(q > 0L) || !(q < 1L)) throw std::invalid_argument("pochhammer_q: q must lie in (0, 1)");
  if (m && *m < 0) throw std::invalid_argument("pochhammer_q: m must be >= 0");
  const Bits prec = ctx.bits();
  const BigFloat qp = q.rounded_to(prec);
  Complex zq(z.re.rounded_to(prec), z.im.rounded_to(prec));
  Complex prod(BigFloat(1L, prec));
  const Complex one(BigFloat(1L, prec));
  const BigFloat tiny = pow10_neg(ctx.digits + ctx.guard, prec);
  for (long n = 0; m ? n < *m : true; ++n) {
    if (!m && zq.abs() < tiny) break;
    if (n > kMaxTerms) throw std::runtime_error("pochhammer_q: product did not converge");
    prod *= one - zq;
    zq *= qp;
  }
  return prod;
}

FSum F_direct_sum(const BigFloat& s, const PrecisionContext& ctx) {
  require_positive(s, "F_direct");
  const unsigned need = required_digits(s);
  if (ctx.digits < need)
    throw PrecisionPolicyError("F_direct: " + std::to_string(ctx.digits) + " digits requested, policy needs " +
                               std::to_string(need));
  const Bits prec = ctx.bits();
  const BigFloat sp = s.rounded_to(prec);
  const BigFloat q = exp(-sp);
  const BigFloat threshold = pow10_neg(ctx.digits + ctx.guard, prec);
  BigFloat term(1L, prec);
  BigFloat sum(1L, prec);
  BigFloat qm(1L, prec);
  long m = 0;
  int quiet = 0;
  // Terms rise then fall; stop only after several consecutive negligible,
  // decaying terms.
  while (quiet < 5) {
    ++m;
    if (m > kMaxTerms) throw std::runtime_error("F_direct: series did not converge");
    qm *= q;
    const BigFloat one_minus = -expm1(-(sp * m));
    const BigFloat ratio = qm / (one_minus * one_minus);
    term *= ratio;
    sum += term;
    if (ratio < 1L && term < sum * threshold)
      ++quiet;
    else
      quiet = 0;
  }
  return {sum, m + 1};
}

BigFloat F_direct(const BigFloat& s, const PrecisionContext& ctx) { return F_direct_sum(s, ctx).value; }

namespace {

BigFloat normalization(const BigFloat& s, Bits prec) {
  const BigFloat sp = s.rounded_to(prec);
  const BigFloat pi = BigFloat::pi(prec);
  return sqrt(2L * pi * sqrt(BigFloat(5L, prec)) / sp) * exp(-(pi * pi) / (5L * sp));
}

}  // namespace

BigFloat R_numeric(const BigFloat& s, const PrecisionContext& ctx) {
  return F_direct(s, ctx) * normalization(s, ctx.bits());
}

BigFloat asymptotic_value(const std::vector<FieldElem>& b, int order, const BigFloat& s, Bits prec) {
  if (order < 0 || order >= static_cast<int>(b.size()))
    throw std::invalid_argument("asymptotic_value: order exceeds available coefficients");
  const unsigned digits = static_cast<unsigned>(prec / 3.3219280948873623) + 5;
  const BigFloat sp = s.rounded_to(prec);
  BigFloat acc(prec);
  for (int j = order; j >= 0; --j) {
    acc *= sp;
    acc += field_embed(b[j], digits).re.rounded_to(prec);
  }
  return acc;
}

EvalReport evaluate(const BigFloat& s, const std::vector<FieldElem>& b, int order, unsigned output_digits) {
  const PrecisionContext ctx = context_for(s, output_digits);
  const Bits prec = ctx.bits();
  EvalReport r;
  r.s = s;
  const FSum f = F_direct_sum(s, ctx);
  r.F_value = f.value;
  r.terms_used = f.terms_used;
  r.R_numeric = f.value * normalization(s, prec);
  r.truncation_order = order;
  r.asymptotic_value = asymptotic_value(b, order, s, prec);
  r.abs_err = abs(r.R_numeric - r.asymptotic_value);
  r.rel_err = r.abs_err / abs(r.R_numeric);
  r.digits_used = ctx.digits;
  return r;
}

std::vector<EvalReport> evaluate_many(const std::vector<BigFloat>& s_values, const std::vector<FieldElem>& b,
                                      int order, unsigned output_digits) {
  return parallel_map(s_values.size(),
                      [&](size_t k) { return evaluate(s_values[k], b, order, output_digits); });
}

nlohmann::json to_json(const EvalReport& r, unsigned output_digits) {
  const int d = static_cast<int>(output_digits);
  return {{"schema_version", 1},
          {"kind", "eval"},
          {"s", r.s.to_string(d)},
          {"F_value", r.F_value.to_string(d)},
          {"R_numeric", r.R_numeric.to_string(d)},
          {"truncation_order", r.truncation_order},
          {"asymptotic_value", r.asymptotic_value.to_string(d)},
          {"abs_err", r.abs_err.to_string(d)},
          {"rel_err", r.rel_err.to_string(d)},
          {"terms_used", r.terms_used},
          {"digits_used", r.digits_used}};
}

std::string eval_csv(const std::vector<EvalReport>& reports, unsigned output_digits) {
  const int d = static_cast<int>(output_digits);
  std::ostringstream os;
  os << "schema_version,s,R_numeric,asymptotic,abs_err,rel_err,order,terms_used\n";
  for (const auto& r : reports) {
    os << 1 << ',' << r.s.to_string(d) << ',' << r.R_numeric.to_string(d) << ','
       << r.asymptotic_value.to_string(d) << ',' << r.abs_err.to_string(d) << ',' << r.rel_err.to_string(d)
       << ',' << r.truncation_order << ',' << r.terms_used << '\n';
  }
  return os.str();
}

CoefficientEstimate extract_coefficient(int j, const std::vector<BigFloat>& s_grid,
                                        const std::vector<FieldElem>& lower_b, unsigned output_digits) {
  if (j < 1) throw std::invalid_argument("extract_coefficient: j must be >= 1");
  if (static_cast<int>(lower_b.size()) < j)
    throw std::invalid_argument("extract_coefficient: need exact b_0..b_{j-1}");
  if (s_grid.size() < 2) throw std::invalid_argument("extract_coefficient: grid needs >= 2 points");
  for (size_t k = 0; k < s_grid.size(); ++k) {
    require_positive(s_grid[k], "extract_coefficient");
    if (k > 0 && !(s_grid[k] < s_grid[k - 1]))
      throw std::invalid_argument("extract_coefficient: grid must be strictly descending");
  }

  CoefficientEstimate out;
  out.j = j;
  out.raw = parallel_map(s_grid.size(), [&](size_t k) {
    const BigFloat& s = s_grid[k];
    const PrecisionContext ctx = context_for(s, output_digits);
    const Bits prec = ctx.bits();
    const BigFloat residual = R_numeric(s, ctx) - asymptotic_value(lower_b, j - 1, s, prec);
    return residual / pow(s.rounded_to(prec), static_cast<long>(j));
  });

  const BigFloat full = neville_at_zero(s_grid, out.raw);
  const std::vector<BigFloat> xs(s_grid.begin() + 1, s_grid.end());
  const std::vector<BigFloat> ys(out.raw.begin() + 1, out.raw.end());
  const BigFloat reduced = neville_at_zero(xs, ys);
  out.estimate = full;
  out.error = abs(full - reduced);

  BigFloat lo = out.raw.front(), hi = out.raw.front();
  for (const auto& e : out.raw) {
    if (e < lo) lo = e;
    if (e > hi) hi = e;
  }
  const BigFloat spread = (hi - lo) / abs(full);
  if (spread > BigFloat(0.1, spread.precision())) {
    out.consistent = false;
    out.warning = "grid estimates of b_" + std::to_string(j) + " disagree by " + spread.to_string(3) +
                  " (relative); grid may lie outside the asymptotic regime";
  }
  return out;
}

std::vector<BigInt> f_series(int M) {
  if (M < 0) throw std::invalid_argument("f_series: M must be >= 0");
  std::vector<BigInt> out(static_cast<size_t>(M) + 1);
  std::vector<BigInt> partitions(static_cast<size_t>(M) + 1);  // 1/(q;q)_m
  partitions[0] = 1;
  for (int m = 0; m * (m + 1) / 2 <= M; ++m) {
    if (m >= 1)
      for (int k = m; k <= M; ++k) partitions[k] += partitions[k - m];
    const int shift = m * (m + 1) / 2;
    for (int a = 0; a + shift <= M; ++a) {
      if (partitions[a] == 0) continue;
      for (int b = 0; a + b + shift <= M; ++b) out[a + b + shift] += partitions[a] * partitions[b];
    }
  }
  return out;
}

ConstantTermReport constant_term_check(int M) {
  if (M < 0 || M > 30) throw std::invalid_argument("constant_term_check: M must lie in [0, 30]");
  // Bivariate series in r = q^(1/2) (degree <= 2M) and z (|degree| <= 2M).
  const int rmax = 2 * M;
  const int zoff = 2 * M;
  const int zdim = 4 * M + 1;
  std::vector<std::vector<BigInt>> c(static_cast<size_t>(rmax) + 1, std::vector<BigInt>(zdim));
  c[0][zoff] = 1;
  for (int e = 1; e <= rmax; e += 2) {
    // times 1/(1 - z r^e)
    for (int r = e; r <= rmax; ++r)
      for (int z = 1; z < zdim; ++z)
        if (c[r - e][z - 1] != 0) c[r][z] += c[r - e][z - 1];
  }
  for (int e = 1; e <= rmax; e += 2) {
    // times (1 + z^-1 r^e)
    for (int r = rmax; r >= e; --r)
      for (int z = 0; z + 1 < zdim; ++z)
        if (c[r - e][z + 1] != 0) c[r][z] += c[r - e][z + 1];
  }

  ConstantTermReport rep;
  rep.M = M;
  rep.direct = f_series(M);
  rep.half_powers_vanish = true;
  for (int r = 1; r <= rmax; r += 2)
    if (c[r][zoff] != 0) rep.half_powers_vanish = false;
  for (int k = 0; k <= M; ++k) rep.constant_term.push_back(c[2 * k][zoff]);
  rep.pass = rep.half_powers_vanish;
  for (int k = 0; k <= M; ++k) {
    if (rep.direct[k] != rep.constant_term[k]) {
      rep.first_mismatch = k;
      rep.pass = false;
      break;
    }
  }
  return rep;
}

const char* to_string(PolylogArg w) { return w == PolylogArg::PhiInverse ? "phi^-1" : "-phi"; }

FieldElem exact_value(PolylogArg w) {
  return w == PolylogArg::PhiInverse ? FieldElem::phi() - FieldElem(1L) : -FieldElem::phi();
}

namespace {

// sum_{n>=1} x^n / n^2 for |x| < 1.
BigFloat li2_series(const BigFloat& x) {
  const Bits prec = x.precision();
  const BigFloat tiny = pow(BigFloat(2L, prec), -static_cast<long>(prec) - 8);
  BigFloat acc(prec);
  BigFloat xn = x;
  for (long n = 1;; ++n) {
    const BigFloat term = xn / (n * n);
    acc += term;
    if (abs(term) < tiny) break;
    xn *= x;
  }
  return acc;
}

}  // namespace

BigFloat li2(PolylogArg w, Bits prec) {
  const BigFloat phi = phi_value(prec);
  if (w == PolylogArg::PhiInverse) return li2_series(phi - 1L);
  // Inversion: Li2(z) + Li2(1/z) = -pi^2/6 - log(-z)^2/2 for z < 0.
  const BigFloat pi = BigFloat::pi(prec);
  const BigFloat lg = log(phi);
  return -(pi * pi) / 6L - lg * lg / 2L - li2_series(-(phi - 1L));
}

BigFloat li1(PolylogArg w, Bits prec) {
  const BigFloat phi = phi_value(prec);
  const BigFloat x = w == PolylogArg::PhiInverse ? phi - 1L : -phi;
  return -log(BigFloat(1L, prec) - x);
}

LogPochReport log_poch_check(PolylogArg w, const BigFloat& v, int N, const std::vector<BigFloat>& s_grid,
                             int sign, unsigned digits) {
  if (N < 0) throw std::invalid_argument("log_poch_check: N must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("log_poch_check: sign must be +1 or -1");
  for (const auto& s : s_grid)
    if (!(s > 0L) || s > BigFloat(0.2, s.precision()) + BigFloat(1e-30, s.precision()))
      throw std::invalid_argument("log_poch_check: s must lie in (0, 0.2]");
  const PrecisionContext ctx(digits);
  const Bits prec = ctx.bits();

  // Coefficients independent of s.
  const FieldElem wx = exact_value(w);
  std::vector<Complex> bern;      // B_{k+1}(1/2 + sign i v), k = 1..N
  std::vector<BigFloat> li_neg;   // Li_{1-k}(w), k = 1..N
  const Complex vv(v.rounded_to(prec) * static_cast<long>(sign), BigFloat(prec));
  for (int k = 1; k <= N; ++k) {
    bern.push_back(bernoulli_poly_shifted(k + 1).evaluate(vv, ctx.digits + ctx.guard));
    li_neg.push_back(field_embed(polylog_neg(k - 1, wx), ctx.digits + ctx.guard).re);
  }
  const BigFloat l2 = li2(w, prec);
  const BigFloat l1 = li1(w, prec);
  const BigFloat wf = field_embed(wx, ctx.digits + ctx.guard).re;

  LogPochReport rep;
  rep.w = w;
  rep.v = v;
  rep.N = N;
  rep.sign = sign;
  rep.rows = parallel_map(s_grid.size(), [&](size_t idx) {
    const BigFloat s = s_grid[idx].rounded_to(prec);
    const BigFloat q = exp(-s);
    // x = w exp(-s (1/2 + sign i v))
    const BigFloat mag = wf * exp(-s / 2L);
    const BigFloat theta = s * v.rounded_to(prec) * static_cast<long>(-sign);
    Complex x(mag * cos(theta), mag * sin(theta));
    const Complex one(BigFloat(1L, prec));
    const BigFloat tiny = pow10_neg(ctx.digits + ctx.guard, prec);
    Complex direct{BigFloat(prec), BigFloat(prec)};
    for (long n = 0; x.abs() >= tiny; ++n) {
      if (n > kMaxTerms) throw std::runtime_error("log_poch_check: product did not converge");
      direct += log(one - x);
      x *= q;
    }

    Complex trunc(-(l2 / s), BigFloat(prec));
    trunc += Complex(BigFloat(prec), l1 * v.rounded_to(prec) * static_cast<long>(sign));
    BigFloat fact(1L, prec);
    BigFloat spow(1L, prec);
    for (int k = 1; k <= N; ++k) {
      fact *= static_cast<long>(k + 1);
      spow *= -s;
      trunc += bern[k - 1] * (li_neg[k - 1] * spow / fact);
    }
    LogPochRow row;
    row.s = s;
    row.error = (direct - trunc).abs();
    row.direct = std::move(direct);
    row.truncated = std::move(trunc);
    return row;
  });
  for (size_t k = 0; k + 1 < rep.rows.size(); ++k)
    rep.ratios.push_back((rep.rows[k].error / rep.rows[k + 1].error).to_double());
  return rep;
}

namespace {

// log |(-phi e^{-s(iv+1/2)}; q)_inf| - log |(phi^-1 e^{-s(-iv+1/2)}; q)_inf|
BigFloat log_arc_ratio(const BigFloat& s, const BigFloat& v, const PrecisionContext& ctx) {
  const Bits prec = ctx.bits();
  const BigFloat phi = phi_value(prec);
  const BigFloat phi_inv = phi - 1L;
  const BigFloat q = exp(-s);
  const BigFloat c = cos(s * v);
  const BigFloat tiny = pow10_neg(ctx.digits + ctx.guard, prec);
  BigFloat y = exp(-s / 2L);
  BigFloat acc(prec);
  for (long n = 0; phi * y >= tiny; ++n) {
    if (n > kMaxTerms) throw std::runtime_error("minor_arc_check: product did not converge");
    // |1 + phi y e^{-i sv}|^2 and |1 - phi^-1 y e^{i sv}|^2
    const BigFloat a = phi * y;
    const BigFloat b = phi_inv * y;
    acc += log1p(2L * a * c + a * a);
    acc -= log1p(-2L * b * c + b * b);
    y *= q;
  }
  return acc / 2L;
}

BigFloat log_arc_bound(const BigFloat& s) {
  const Bits prec = s.precision();
  const BigFloat pi = BigFloat::pi(prec);
  return pi * pi / (5L * s) - sqrt(BigFloat(5L, prec)) / (2L * root(s, 3));
}

}  // namespace

MinorArcReport minor_arc_check(const std::vector<BigFloat>& s_grid, const std::vector<double>& fractions,
                               unsigned digits) {
  for (const auto& s : s_grid) require_positive(s, "minor_arc_check");
  for (double f : fractions)
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("minor_arc_check: fractions must lie in [0, 1]");
  const PrecisionContext ctx(digits);
  const Bits prec = ctx.bits();

  struct Job {
    size_t s_index;
    double fraction;  // < 0 marks the literal-hypothesis point v = s^(2/3)
  };
  std::vector<Job> jobs;
  for (size_t k = 0; k < s_grid.size(); ++k) {
    for (double f : fractions) jobs.push_back({k, f});
    jobs.push_back({k, 1.0});
    jobs.push_back({k, -1.0});
  }

  const auto samples = parallel_map(jobs.size(), [&](size_t idx) {
    const Job& job = jobs[idx];
    const BigFloat s = s_grid[job.s_index].rounded_to(prec);
    const BigFloat third(1.0 / 3.0, prec);
    BigFloat v(prec);
    if (job.fraction < 0) {
      v = pow(s, BigFloat(2L, prec) / 3L);
    } else {
      const BigFloat boundary = pow(s, -(BigFloat(2L, prec) / 3L));
      const BigFloat end = BigFloat::pi(prec) / s;
      v = boundary + (end - boundary) * BigFloat(job.fraction, prec);
    }
    MinorArcSample out;
    out.s = s;
    out.fraction = job.fraction;
    out.v = v;
    out.log_ratio = log_arc_ratio(s, v, ctx);
    out.log_bound = log_arc_bound(s);
    out.ratio_over_bound = exp(out.log_ratio - out.log_bound).to_double();
    return out;
  });

  MinorArcReport rep;
  rep.fitted_C = 0;
  for (size_t idx = 0; idx < samples.size(); ++idx) {
    const size_t per_s = fractions.size() + 2;
    const size_t slot = idx % per_s;
    if (slot < fractions.size()) {
      rep.fitted_C = std::max(rep.fitted_C, samples[idx].ratio_over_bound);
      rep.samples.push_back(samples[idx]);
    } else if (slot == fractions.size()) {
      rep.endpoint_ratio.push_back(samples[idx].ratio_over_bound);
    } else {
      rep.literal_hypothesis_ratio.push_back(samples[idx].ratio_over_bound);
    }
  }
  rep.pass = rep.fitted_C <= rep.C_limit;
  return rep;
}

}  // namespace unclosed
