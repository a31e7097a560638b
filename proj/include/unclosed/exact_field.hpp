// Exact arithmetic in the degree-8 number field Q(i, 5^(1/4)).
//
// An element is stored densely as eight rational coordinates over the basis
// {d^a * i^b : 0 <= a <= 3, b in {0, 1}}, where d is the positive real fourth
// root of 5. Coordinate index is a + 4*b, so the order is
// 1, d, d^2, d^3, i, i*d, i*d^2, i*d^3. The relations d^4 = 5 and i^2 = -1
// are applied during multiplication and never stored.
#pragma once

#include "unclosed/bigfloat.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace unclosed {

using BigInt = mpz_class;
/// GMP rationals are kept canonical: lowest terms, positive denominator.
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class SubfieldTag { Rational, Sqrt5, Full };

const char* to_string(SubfieldTag tag);

class FieldElem {
 public:
  static constexpr int kDim = 8;
  using Coords = std::array<BigRational, kDim>;

  FieldElem() = default;
  FieldElem(long value);  // NOLINT(google-explicit-constructor)
  FieldElem(const BigRational& value);  // NOLINT(google-explicit-constructor)
  explicit FieldElem(Coords coords) : coords_(std::move(coords)) {}

  /// Basis element d^a * i^b.
  static FieldElem basis(int a, int b);
  static FieldElem d() { return basis(1, 0); }
  static FieldElem i() { return basis(0, 1); }
  static FieldElem sqrt5() { return basis(2, 0); }
  /// Golden ratio (1 + sqrt5) / 2.
  static FieldElem phi();

  const Coords& coords() const { return coords_; }
  const BigRational& coord(int index) const { return coords_.at(index); }

  bool is_zero() const;
  bool is_one() const;
  /// True when all i-coordinates vanish.
  bool is_real() const;

  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator*=(const BigRational& rhs);
  FieldElem& operator/=(const FieldElem& rhs) { return *this *= rhs.inverse(); }
  FieldElem operator-() const;

  /// Multiplicative inverse via the product of the seven nontrivial Galois
  /// conjugates divided by the (rational) norm. Throws DivisionByZero on 0.
  FieldElem inverse() const;
  /// Image under the automorphism d -> i^k d, i -> (sign) i.
  FieldElem conjugate(int k, int sign) const;
  /// Product of all eight conjugates; always rational.
  BigRational norm() const;
  FieldElem pow(long n) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.coords_ == b.coords_; }

 private:
  Coords coords_{};
};

inline FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
inline FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem r = a;
  return r *= b;
}
inline FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

FieldElem field_add(const FieldElem& a, const FieldElem& b);
FieldElem field_mul(const FieldElem& a, const FieldElem& b);
FieldElem field_inv(const FieldElem& a);

/// Complex value with d = 5^(1/4) > 0 and i the imaginary unit, accurate to
/// `digits` significant decimal digits. Requires digits >= 1.
Complex field_embed(const FieldElem& a, unsigned digits);

/// Smallest subfield (Q, Q(sqrt5) or the full field) containing `a`.
SubfieldTag subfield_of(const FieldElem& a);

/// "p + q·√5" for elements of Q(sqrt5), "p" for rationals, and a sum over the
/// named basis otherwise.
std::string render(const FieldElem& a);

/// {"basis": ["1","d",...], "coords": [["num","den"], ...]}
nlohmann::json to_json(const FieldElem& a);
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
FieldElem field_from_json(const nlohmann::json& j);

std::string rational_string(const BigRational& q);

}  // namespace unclosed
