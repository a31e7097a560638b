#include "unclosed/special_sequences.hpp"

#include <stdexcept>
#include <string>

namespace unclosed {

namespace {

std::vector<std::vector<BigInt>> build_eulerian(int max_n) {
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({BigInt(1)});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      BigInt v = 0;
      if (k < static_cast<int>(prev.size())) v += (k + 1) * prev[k];
      if (k >= 1 && k - 1 < static_cast<int>(prev.size())) v += (n - k) * prev[k - 1];
      row[k] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldElem polylog_from_row(const std::vector<BigInt>& row, int n, const FieldElem& w) {
  const FieldElem one_minus = FieldElem(1L) - w;
  if (one_minus.is_zero()) throw DivisionByZero("Li_{-n}(w) has a pole at w = 1");
  // Horner on the numerator sum_k A(n,k) w^(k+1).
  FieldElem num;
  for (auto it = row.rbegin(); it != row.rend(); ++it) {
    num *= w;
    num += FieldElem(BigRational(*it));
  }
  num *= w;
  return num * one_minus.inverse().pow(n + 1);
}

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::vector<BigRational> bernoulli_numbers(int N) {
  if (N < 0) throw std::invalid_argument("bernoulli_numbers: N must be >= 0");
  std::vector<BigRational> b(static_cast<size_t>(N) + 1);
  b[0] = 1;
  for (int n = 1; n <= N; ++n) {
    if (n >= 3 && n % 2 == 1) continue;  // odd values past B_1 vanish
    BigRational acc = 0;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) acc += BigRational(binomial(n + 1, j)) * b[j];
    b[n] = -acc / (n + 1);
  }
  return b;
}

SequenceTables::SequenceTables(int max_order) : max_order_(max_order) {
  if (max_order < 2) throw std::invalid_argument("SequenceTables: max_order must be >= 2");
  eulerian_ = build_eulerian(max_order);
  bernoulli_ = bernoulli_numbers(max_order + 1);
  const FieldElem phi_inv = FieldElem::phi() - FieldElem(1L);
  const FieldElem neg_phi = -FieldElem::phi();
  en_.reserve(static_cast<size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) {
    FieldElem a = polylog_from_row(eulerian_[n], n, phi_inv);
    FieldElem b = polylog_from_row(eulerian_[n], n, neg_phi);
    en_.push_back(n % 2 == 0 ? a - b : a + b);
  }
}

const std::vector<BigInt>& SequenceTables::eulerian_row(int n) const {
  if (n < 0 || n > max_order_)
    throw std::out_of_range("Eulerian row " + std::to_string(n) + " outside table");
  return eulerian_[n];
}

const FieldElem& SequenceTables::en(int n) const {
  if (n < 0 || n > max_order_)
    throw std::out_of_range("E_" + std::to_string(n) + " outside table");
  return en_[n];
}

const SequenceTables& default_tables() {
  static const SequenceTables tables;
  return tables;
}

std::vector<BigInt> eulerian_row(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_row: n must be >= 0");
  if (n <= default_tables().max_order()) return default_tables().eulerian_row(n);
  return build_eulerian(n).back();
}

FieldElem polylog_neg(int n, const FieldElem& w) {
  if (n < 0) throw std::invalid_argument("polylog_neg: order must be >= 0");
  if (n <= default_tables().max_order()) return polylog_from_row(default_tables().eulerian_row(n), n, w);
  return polylog_from_row(eulerian_row(n), n, w);
}

VPoly bernoulli_poly_shifted(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly_shifted: n must be >= 0");
  const std::vector<BigRational> b = n + 1 <= default_tables().max_order() + 1
                                         ? default_tables().bernoulli()
                                         : bernoulli_numbers(n);
  // B_n(x) = sum_j C(n,j) B_{n-j} x^j with x = 1/2 + i v, and
  // x^j = sum_m C(j,m) (1/2)^(j-m) (i v)^m.
  std::vector<BigRational> real_part(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    if (b[n - j] == 0) continue;
    const BigRational cj = BigRational(binomial(n, j)) * b[n - j];
    for (int m = 0; m <= j; ++m) {
      BigRational half_pow(1, 1);
      mpz_mul_2exp(half_pow.get_den_mpz_t(), half_pow.get_den_mpz_t(), static_cast<mp_bitcnt_t>(j - m));
      real_part[m] += cj * BigRational(binomial(j, m)) * half_pow;
    }
  }
  std::vector<FieldElem> coeffs(static_cast<size_t>(n) + 1);
  const FieldElem i = FieldElem::i();
  FieldElem ipow(1L);
  for (int m = 0; m <= n; ++m) {
    if (real_part[m] != 0) coeffs[m] = ipow * FieldElem(real_part[m]);
    ipow *= i;
  }
  return VPoly(std::move(coeffs));
}

FieldElem en_value(int n) {
  if (n < 0) throw std::invalid_argument("en_value: n must be >= 0");
  if (n <= default_tables().max_order()) return default_tables().en(n);
  const FieldElem phi_inv = FieldElem::phi() - FieldElem(1L);
  const FieldElem a = polylog_neg(n, phi_inv);
  const FieldElem b = polylog_neg(n, -FieldElem::phi());
  return n % 2 == 0 ? a - b : a + b;
}

}  // namespace unclosed
