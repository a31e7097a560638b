// Diagnostics for the divergence of the expansion: the normalized sequence
//   Ebar_n = E_n (log phi)^(n+1) / n!,
// partial exponentials with normalized Bernoulli weights, the factorial blow-up
// of the top term of J, and growth statistics of b_j.
#pragma once

#include "unclosed/asymptotic.hpp"
#include "unclosed/bigfloat.hpp"

#include <json.hpp>

#include <vector>

namespace unclosed {

/// E_n (log phi)^(n+1) / n! at `digits` decimal digits.
BigFloat ebar(int n, unsigned digits = 80);

struct PolylogSeriesCheck {
  int n = 0;
  BigFloat exact;   // embedding of the exact E_n
  BigFloat series;  // from the lattice sums below
  /// Number of agreeing significant digits, floor(-log10 |rel diff|).
  int agreeing_digits = 0;
};

/// E_n from Li_{-n}(e^{-mu}) = n! sum_{k in Z} (2 pi i k + mu)^{-n-1} with
/// mu = log phi and mu = i pi - log phi, summed over |k| <= terms. n >= 1.
PolylogSeriesCheck ebar_series_check(int n, long terms = 3000, unsigned digits = 60);

/// Normalized Bernoulli values Bbar_k with
///   B_k(1/2) = 2 (2 pi)^(-k) k! cos(pi k / 2) Bbar_k.
/// Bbar_k equals the alternating zeta value (1 - 2^(1-k)) zeta(k), which also
/// supplies the odd indices where the cosine vanishes (Bbar_0 = 1/2,
/// Bbar_1 = log 2).
class BbarTable {
 public:
  BbarTable(int max_index, unsigned digits = 50);
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const BigFloat& operator[](int k) const { return values_.at(static_cast<size_t>(k)); }
  Bits precision() const { return prec_; }

 private:
  Bits prec_;
  std::vector<BigFloat> values_;
};

/// e_{k+1,B}(z) = sum_{j=0}^{k+1} Bbar_{k+1-j} z^j / j!.
BigFloat partial_exp(int k, const BigFloat& z, const BbarTable& table);

/// T_{k,B}(x) = (e_{k+1,B}(x) - (-1)^k e_{k+1,B}(-x)) / 2.
BigFloat t_combination(int k, const BigFloat& x, const BbarTable& table);

/// max over `points` equally spaced z in [-2, 2] of |e_{k+1,B}(z) - e^z|.
double partial_exp_error(int k, const BbarTable& table, int points = 401);

struct CoshRow {
  int ell = 0;
  double v = 0;
  double alpha = 0;
  /// Top term k = 4l+1 of J at real argument v/(2 pi), over (4l)! alpha^(4l+1).
  /// Independent of alpha.
  double top_ratio = 0;
  /// Same quotient for the whole sum J_{4l+1}.
  double full_ratio = 0;
  /// -Ebar_{4l} T_{4l+1,B}(v) / pi, which equals top_ratio identically.
  double t_form = 0;
  /// -cosh(v)/pi, the limit of top_ratio.
  double target = 0;
  /// -cosh(v)/(2 pi), the constant printed with the limit in the source
  /// derivation; recorded for comparison.
  double target_half = 0;
};

/// One row per (l, v, alpha), ordered by l, then v, then alpha. Requires
/// 1 <= l <= 6.
std::vector<CoshRow> cosh_limit_check(const std::vector<int>& ells, const std::vector<double>& vs,
                                      const std::vector<double>& alphas, unsigned digits = 60);

struct EbarFit {
  int n_lo = 0;
  int n_hi = 0;
  double K = 0;  // fitted geometric rate
  double C = 0;  // fitted prefactor
};

/// Least squares fit of log |Ebar_n - 1| = log C + n log K over [n_lo, n_hi].
EbarFit fit_ebar_rate(const std::vector<BigFloat>& ebar_values, int n_lo, int n_hi);

struct BGrowth {
  /// roots[j-1] = |b_j|^(1/j), j = 1..J.
  std::vector<double> roots;
  /// ratios[j-1] = |b_{j+1} / b_j|, j = 1..J-1.
  std::vector<double> ratios;
  /// roots strictly increasing on the last four indices.
  bool tail_increasing = false;
  /// Smallest j with |b_{i+1}/b_i| > 1 for every computed i >= j, or -1.
  int j0 = -1;
};

/// Requires r.max_order >= 6.
BGrowth b_growth(const ExpansionResult& r);

struct GrowthReport {
  int n_max = 0;
  std::vector<BigFloat> ebar;  // index n = 0..n_max
  std::vector<double> ebar_err;
  EbarFit fit;
  PolylogSeriesCheck series_check;
  std::vector<int> partial_exp_k;
  std::vector<double> partial_exp_err;
  std::vector<CoshRow> cosh;
  BGrowth b;
};

/// Full report for `diverge`. Requires 6 <= n_max <= 64 and r.max_order >= 6.
GrowthReport growth_report(const ExpansionResult& r, int n_max);

nlohmann::json to_json(const GrowthReport& g);
/// Two CSV blocks: (n, Ebar_n, |Ebar_n - 1|) and (j, |b_j|^(1/j)).
std::string growth_csv(const GrowthReport& g);

}  // namespace unclosed
