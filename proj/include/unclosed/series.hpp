// Truncated series in t = s^(1/2) whose coefficients are polynomials in v.
//
// The asymptotic exponent J(s, v) is rewritten in the scaled variable
// v -> v / sqrt(sqrt5 * s), which turns powers of s into half-integer powers.
// Working in t keeps every exponent an integer.
#pragma once

#include "unclosed/special_sequences.hpp"
#include "unclosed/vpoly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace unclosed {

class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PuiseuxSeries {
 public:
  explicit PuiseuxSeries(int trunc_order);

  int trunc_order() const { return trunc_order_; }
  /// Coefficient of t^m; zero for m outside [0, trunc_order].
  const VPoly& term(int m) const;
  /// Sets the coefficient of t^m. Powers above the truncation are dropped.
  void set_term(int m, VPoly p);
  void add_to_term(int m, const VPoly& p);
  bool is_zero() const;

  PuiseuxSeries& operator+=(const PuiseuxSeries& rhs);
  PuiseuxSeries operator-() const;

  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a.trunc_order_ == b.trunc_order_ && a.terms_ == b.terms_;
  }

 private:
  int trunc_order_;
  std::vector<VPoly> terms_;
};

PuiseuxSeries series_add(const PuiseuxSeries& a, const PuiseuxSeries& b);
/// Cauchy product truncated at the common order.
PuiseuxSeries series_mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
/// exp(a) for a with zero constant term. Throws std::invalid_argument otherwise.
PuiseuxSeries series_exp(const PuiseuxSeries& a);
/// Formal logarithm of a series whose constant term is exactly 1.
PuiseuxSeries series_log(const PuiseuxSeries& a);

/// sum_{k=2}^{N} E_{k-1} s^k B_{k+1}(1/2 + i v')/(k+1)!  with  v' = v/sqrt(sqrt5 s),
/// expanded in t. A monomial v^j of B_{k+1}(1/2 + i v) lands on t^(2k-j) with
/// its coefficient scaled by 5^(-j/4).
PuiseuxSeries build_J_substituted(int N, int trunc_order,
                                  const SequenceTables& tables = default_tables());

/// Standard normal moments: entry m is E[v^(2m)] = (2m-1)!!.
class GaussianMoments {
 public:
  explicit GaussianMoments(int max_m = 0);
  BigRational moment(int m);

 private:
  std::vector<BigRational> moments_;
};

/// (1/sqrt(2 pi)) * integral of exp(-v^2/2) p(v) over the real line.
FieldElem gaussian_integrate(const VPoly& p);

/// {"t^m": [[coords of v^0], [coords of v^1], ...]}
nlohmann::json series_to_json(const PuiseuxSeries& s);

}  // namespace unclosed
