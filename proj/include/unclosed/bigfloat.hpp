// Arbitrary-precision real and complex floats on top of MPFR.
//
// Every value carries its own precision; binary operations produce a result
// at the larger of the two operand precisions. There is no global default,
// so values built on different threads never interfere.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace unclosed {

using Bits = mpfr_prec_t;

/// Binary precision that carries `digits` significant decimal digits plus a
/// few spare bits.
Bits bits_for_digits(unsigned digits);

class BigFloat {
 public:
  BigFloat();
  explicit BigFloat(Bits prec);
  BigFloat(int value, Bits prec);
  BigFloat(long value, Bits prec);
  BigFloat(double value, Bits prec);
  BigFloat(const mpz_class& value, Bits prec);
  BigFloat(const mpq_class& value, Bits prec);

  /// Parses a decimal literal such as "0.05" or "1e-3". Throws
  /// std::invalid_argument on malformed input.
  static BigFloat parse(std::string_view text, Bits prec);

  static BigFloat pi(Bits prec);
  static BigFloat zeta(unsigned long n, Bits prec);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Bits precision() const { return mpfr_get_prec(value_); }
  BigFloat rounded_to(Bits prec) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator+=(long rhs);
  BigFloat& operator-=(long rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);
  BigFloat operator-() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  void widen_to(Bits prec);

  mpfr_t value_;
};

inline BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
inline BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
inline BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
inline BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
inline BigFloat operator+(BigFloat a, long b) { return a += b; }
inline BigFloat operator-(BigFloat a, long b) { return a -= b; }
inline BigFloat operator*(BigFloat a, long b) { return a *= b; }
inline BigFloat operator/(BigFloat a, long b) { return a /= b; }
inline BigFloat operator*(long a, BigFloat b) { return b *= a; }

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

struct Complex {
  BigFloat re;
  BigFloat im;

  Complex() = default;
  explicit Complex(const BigFloat& real);
  Complex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  Bits precision() const { return std::max(re.precision(), im.precision()); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const BigFloat& rhs);
  Complex& operator/=(const BigFloat& rhs);
  Complex operator-() const { return {-re, -im}; }

  Complex conj() const { return {re, -im}; }
  /// |z|^2
  BigFloat norm() const;
  BigFloat abs() const;
  BigFloat arg() const;
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator*(Complex a, const BigFloat& b) { return a *= b; }
inline Complex operator/(Complex a, const BigFloat& b) { return a /= b; }

Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
Complex pow(const Complex& z, long n);

}  // namespace unclosed
