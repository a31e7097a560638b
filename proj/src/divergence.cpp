#include "unclosed/divergence.hpp"

#include "unclosed/parallel.hpp"
#include "unclosed/special_sequences.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace unclosed {

namespace {

BigFloat log_phi(Bits prec) { return log((sqrt(BigFloat(5L, prec)) + 1L) / 2L); }

FieldElem en_exact(int n) {
  const SequenceTables& t = default_tables();
  return n <= t.max_order() ? t.en(n) : en_value(n);
}

BigFloat embed_real(const FieldElem& a, unsigned digits) { return field_embed(a, digits).re; }

}  // namespace

BigFloat ebar(int n, unsigned digits) {
  if (n < 0) throw std::invalid_argument("ebar: n must be >= 0");
  const Bits prec = bits_for_digits(digits + 10);
  const BigFloat e = embed_real(en_exact(n), digits + 10).rounded_to(prec);
  return e * pow(log_phi(prec), static_cast<long>(n) + 1) / BigFloat(factorial(n), prec);
}

PolylogSeriesCheck ebar_series_check(int n, long terms, unsigned digits) {
  if (n < 1) throw std::invalid_argument("ebar_series_check: n must be >= 1");
  if (terms < 1) throw std::invalid_argument("ebar_series_check: terms must be >= 1");
  const Bits prec = bits_for_digits(digits + 10);
  const BigFloat pi = BigFloat::pi(prec);
  const BigFloat lg = log_phi(prec);

  auto lattice_sum = [&](const Complex& mu) {
    Complex acc{BigFloat(prec), BigFloat(prec)};
    // Smallest terms first.
    for (long k = terms; k >= 1; --k) {
      const BigFloat step = 2L * pi * k;
      acc += pow(Complex(mu.re, mu.im + step), -(n + 1L));
      acc += pow(Complex(mu.re, mu.im - step), -(n + 1L));
    }
    acc += pow(mu, -(n + 1L));
    return acc;
  };

  const BigFloat nfact(factorial(n), prec);
  // e^{-mu} = 1/phi and e^{-mu} = -phi.
  const BigFloat li_inv = lattice_sum(Complex(lg, BigFloat(prec))).re * nfact;
  const BigFloat li_neg = lattice_sum(Complex(-lg, pi)).re * nfact;

  PolylogSeriesCheck out;
  out.n = n;
  out.series = n % 2 == 0 ? li_inv - li_neg : li_inv + li_neg;
  out.exact = embed_real(en_exact(n), digits + 10).rounded_to(prec);
  const BigFloat rel = abs(out.series - out.exact) / abs(out.exact);
  out.agreeing_digits = rel.is_zero() ? static_cast<int>(digits)
                                      : static_cast<int>(std::floor(-std::log10(rel.to_double())));
  return out;
}

BbarTable::BbarTable(int max_index, unsigned digits) : prec_(bits_for_digits(digits + 10)) {
  if (max_index < 1) throw std::invalid_argument("BbarTable: max_index must be >= 1");
  values_.reserve(static_cast<size_t>(max_index) + 1);
  values_.push_back(BigFloat(1L, prec_) / 2L);
  values_.push_back(log(BigFloat(2L, prec_)));
  for (long k = 2; k <= max_index; ++k) {
    const BigFloat factor = BigFloat(1L, prec_) - pow(BigFloat(2L, prec_), 1 - k);
    values_.push_back(factor * BigFloat::zeta(static_cast<unsigned long>(k), prec_));
  }
}

BigFloat partial_exp(int k, const BigFloat& z, const BbarTable& table) {
  if (k < 0) throw std::invalid_argument("partial_exp: k must be >= 0");
  if (k + 1 > table.max_index()) throw std::out_of_range("partial_exp: table too short");
  const Bits prec = table.precision();
  const BigFloat zp = z.rounded_to(prec);
  BigFloat acc(prec);
  BigFloat power(1L, prec);  // z^j / j!
  for (int j = 0; j <= k + 1; ++j) {
    if (j > 0) {
      power *= zp;
      power /= static_cast<long>(j);
    }
    acc += table[k + 1 - j] * power;
  }
  return acc;
}

BigFloat t_combination(int k, const BigFloat& x, const BbarTable& table) {
  const BigFloat plus = partial_exp(k, x, table);
  const BigFloat minus = partial_exp(k, -x, table);
  return (k % 2 == 0 ? plus - minus : plus + minus) / 2L;
}

double partial_exp_error(int k, const BbarTable& table, int points) {
  if (points < 2) throw std::invalid_argument("partial_exp_error: points must be >= 2");
  const Bits prec = table.precision();
  double worst = 0;
  for (int p = 0; p < points; ++p) {
    const BigFloat z = BigFloat(4L * p - 2L * (points - 1), prec) / static_cast<long>(points - 1);
    worst = std::max(worst, abs(partial_exp(k, z, table) - exp(z)).to_double());
  }
  return worst;
}

std::vector<CoshRow> cosh_limit_check(const std::vector<int>& ells, const std::vector<double>& vs,
                                      const std::vector<double>& alphas, unsigned digits) {
  for (int l : ells)
    if (l < 1 || l > 6) throw std::invalid_argument("cosh_limit_check: l must lie in [1, 6]");
  const Bits prec = bits_for_digits(digits + 10);
  const int top_k = 4 * 6 + 1;
  const BbarTable bbar(top_k + 1, digits);

  struct Job {
    int ell;
    double v;
    double alpha;
  };
  std::vector<Job> jobs;
  for (int l : ells)
    for (double v : vs)
      for (double a : alphas) jobs.push_back({l, v, a});

  return parallel_map(jobs.size(), [&](size_t idx) {
    const Job& job = jobs[idx];
    const int k = 4 * job.ell + 1;
    const BigFloat pi = BigFloat::pi(prec);
    const BigFloat v(job.v, prec);
    const BigFloat alpha(job.alpha, prec);
    const BigFloat s = 2L * pi * log_phi(prec) * alpha;
    const Complex u(v / (2L * pi));
    const BigFloat denom = BigFloat(factorial(k - 1), prec) * pow(alpha, static_cast<long>(k));

    // E_{m-1} s^m B_{m+1}(1/2 + i u) / (m+1)!
    auto term = [&](int m) {
      Complex b = bernoulli_poly_shifted(m + 1).evaluate(u, digits + 10);
      const BigFloat scale = embed_real(en_exact(m - 1), digits + 10).rounded_to(prec) *
                             pow(s, static_cast<long>(m)) / BigFloat(factorial(m + 1), prec);
      return b *= scale;
    };

    CoshRow row;
    row.ell = job.ell;
    row.v = job.v;
    row.alpha = job.alpha;
    Complex full{BigFloat(prec), BigFloat(prec)};
    for (int m = 2; m <= k; ++m) full += term(m);
    row.top_ratio = (term(k).re / denom).to_double();
    row.full_ratio = (full.re / denom).to_double();
    row.t_form = (-(ebar(k - 1, digits) * t_combination(k, v, bbar)) / pi).to_double();
    row.target = (-cosh(v) / pi).to_double();
    row.target_half = row.target / 2;
    return row;
  });
}

EbarFit fit_ebar_rate(const std::vector<BigFloat>& ebar_values, int n_lo, int n_hi) {
  if (n_lo < 0 || n_hi <= n_lo || n_hi >= static_cast<int>(ebar_values.size()))
    throw std::invalid_argument("fit_ebar_rate: bad range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const BigFloat err = abs(ebar_values[n] - 1L);
    if (err.is_zero()) continue;
    const double y = log(err).to_double();
    sx += n;
    sy += y;
    sxx += static_cast<double>(n) * n;
    sxy += n * y;
    ++count;
  }
  if (count < 2) throw std::runtime_error("fit_ebar_rate: fewer than two usable points");
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / count;
  return {n_lo, n_hi, std::exp(slope), std::exp(intercept)};
}

BGrowth b_growth(const ExpansionResult& r) {
  if (r.max_order < 6) throw std::invalid_argument("b_growth: max_order must be >= 6");
  const unsigned digits = 40;
  std::vector<BigFloat> mags;
  for (int j = 1; j <= r.max_order; ++j) mags.push_back(abs(embed_real(r.b[j], digits)));

  BGrowth g;
  for (int j = 1; j <= r.max_order; ++j) {
    const BigFloat& m = mags[j - 1];
    g.roots.push_back(m.is_zero() ? 0.0 : std::exp(log(m).to_double() / j));
  }
  for (int j = 1; j < r.max_order; ++j) g.ratios.push_back((mags[j] / mags[j - 1]).to_double());

  const size_t n = g.roots.size();
  g.tail_increasing = n >= 4;
  for (size_t k = n - 3; k < n && g.tail_increasing; ++k)
    if (!(g.roots[k] > g.roots[k - 1])) g.tail_increasing = false;

  for (int j = static_cast<int>(g.ratios.size()); j >= 1 && g.ratios[j - 1] > 1.0; --j) g.j0 = j;
  return g;
}

GrowthReport growth_report(const ExpansionResult& r, int n_max) {
  if (n_max < 6 || n_max > 64) throw std::invalid_argument("growth_report: n_max must lie in [6, 64]");
  GrowthReport g;
  g.n_max = n_max;
  g.ebar = parallel_map(static_cast<size_t>(n_max) + 1, [](size_t n) { return ebar(static_cast<int>(n)); });
  for (const auto& e : g.ebar) g.ebar_err.push_back(abs(e - 1L).to_double());
  g.fit = fit_ebar_rate(g.ebar, 5, std::min(30, n_max));
  g.series_check = ebar_series_check(5);

  g.partial_exp_k = {10, 20, 40};
  const BbarTable table(42);
  g.partial_exp_err = parallel_map(g.partial_exp_k.size(),
                                   [&](size_t i) { return partial_exp_error(g.partial_exp_k[i], table); });

  g.cosh = cosh_limit_check({1, 2, 3, 4, 5, 6}, {0.0, 1.0}, {0.01, 0.005});
  g.b = b_growth(r);
  return g;
}

nlohmann::json to_json(const GrowthReport& g) {
  nlohmann::json ebar_rows = nlohmann::json::array();
  for (int n = 0; n <= g.n_max; ++n)
    ebar_rows.push_back({{"n", n}, {"ebar", g.ebar[n].to_string(30)}, {"abs_err", g.ebar_err[n]}});

  nlohmann::json pe = nlohmann::json::array();
  for (size_t i = 0; i < g.partial_exp_k.size(); ++i)
    pe.push_back({{"k", g.partial_exp_k[i]}, {"max_err", g.partial_exp_err[i]}});

  nlohmann::json cosh_rows = nlohmann::json::array();
  for (const auto& c : g.cosh)
    cosh_rows.push_back({{"ell", c.ell},
                         {"v", c.v},
                         {"alpha", c.alpha},
                         {"top_ratio", c.top_ratio},
                         {"full_ratio", c.full_ratio},
                         {"t_form", c.t_form},
                         {"target", c.target},
                         {"target_half", c.target_half}});

  nlohmann::json roots = nlohmann::json::array();
  for (size_t j = 0; j < g.b.roots.size(); ++j) roots.push_back({{"j", j + 1}, {"root", g.b.roots[j]}});
  nlohmann::json ratios = nlohmann::json::array();
  for (size_t j = 0; j < g.b.ratios.size(); ++j) ratios.push_back({{"j", j + 1}, {"ratio", g.b.ratios[j]}});

  return {{"schema_version", 1},
          {"kind", "diverge"},
          {"ebar", ebar_rows},
          {"ebar_fit", {{"n_lo", g.fit.n_lo}, {"n_hi", g.fit.n_hi}, {"K", g.fit.K}, {"C", g.fit.C}}},
          {"ebar_series_check",
           {{"n", g.series_check.n},
            {"exact", g.series_check.exact.to_string(30)},
            {"series", g.series_check.series.to_string(30)},
            {"agreeing_digits", g.series_check.agreeing_digits}}},
          {"partial_exp", pe},
          {"cosh_limit", cosh_rows},
          {"b_growth",
           {{"roots", roots}, {"ratios", ratios}, {"tail_increasing", g.b.tail_increasing}, {"j0", g.b.j0}}}};
}

std::string growth_csv(const GrowthReport& g) {
  std::ostringstream os;
  os << "schema_version,kind,n,ebar,abs_err\n";
  for (int n = 0; n <= g.n_max; ++n)
    os << 1 << ",ebar," << n << ',' << g.ebar[n].to_string(30) << ',' << abs(g.ebar[n] - 1L).to_string(6) << '\n';
  os << "schema_version,kind,j,root\n";
  for (size_t j = 0; j < g.b.roots.size(); ++j) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", g.b.roots[j]);
    os << 1 << ",b_root," << j + 1 << ',' << buf << '\n';
  }
  return os.str();
}

}  // namespace unclosed
