// Eulerian numbers, Bernoulli numbers and polynomials, polylogarithms of
// negative order, and the sequence
//   E_n = Li_{-n}(1/phi) - (-1)^n Li_{-n}(-phi).
#pragma once

#include "unclosed/exact_field.hpp"
#include "unclosed/vpoly.hpp"

#include <vector>

namespace unclosed {

/// Eagerly built, read-only tables up to a fixed order. Safe for concurrent
/// reads once constructed.
class SequenceTables {
 public:
  static constexpr int kDefaultMaxOrder = 64;

  explicit SequenceTables(int max_order = kDefaultMaxOrder);

  int max_order() const { return max_order_; }
  /// Row n of the Eulerian triangle, A(n, k) for 0 <= k <= n-1 (row 0 is [1]).
  const std::vector<BigInt>& eulerian_row(int n) const;
  /// B_0 .. B_{max_order + 1}, with B_1 = -1/2.
  const std::vector<BigRational>& bernoulli() const { return bernoulli_; }
  /// E_0 .. E_{max_order}.
  const FieldElem& en(int n) const;

 private:
  int max_order_;
  std::vector<std::vector<BigInt>> eulerian_;
  std::vector<BigRational> bernoulli_;
  std::vector<FieldElem> en_;
};

/// Process-wide tables at the default order, built on first use.
const SequenceTables& default_tables();

std::vector<BigInt> eulerian_row(int n);

/// Li_{-n}(w) = sum_k A(n,k) w^(k+1) / (1-w)^(n+1). Throws DivisionByZero at
/// the pole w = 1.
FieldElem polylog_neg(int n, const FieldElem& w);

/// B_0 .. B_N from sum_{j=0}^{n} C(n+1, j) B_j = 0.
std::vector<BigRational> bernoulli_numbers(int N);

/// B_n(1/2 + i v) as a polynomial in v.
VPoly bernoulli_poly_shifted(int n);

FieldElem en_value(int n);

BigInt binomial(long n, long k);
BigInt factorial(long n);

}  // namespace unclosed
