// Polynomials in the integration variable v with exact field coefficients.
#pragma once

#include "unclosed/exact_field.hpp"

#include <vector>

namespace unclosed {

class VPoly {
 public:
  VPoly() = default;
  explicit VPoly(std::vector<FieldElem> coeffs);
  /// Constant polynomial.
  VPoly(const FieldElem& c);  // NOLINT(google-explicit-constructor)
  /// c * v^degree
  static VPoly monomial(const FieldElem& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  /// Coefficient of v^k; zero beyond the degree.
  FieldElem coeff(int k) const;

  VPoly& operator+=(const VPoly& rhs);
  VPoly& operator-=(const VPoly& rhs);
  VPoly& operator*=(const FieldElem& c);
  VPoly& operator*=(const BigRational& c);
  VPoly operator-() const;

  /// p(c * v)
  VPoly scale_variable(const FieldElem& c) const;
  Complex evaluate(const Complex& v, unsigned digits) const;

  friend bool operator==(const VPoly& a, const VPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend void multiply_accumulate(VPoly& out, const VPoly& a, const VPoly& b,
                                  const BigRational& scale);

 private:
  void trim();

  std::vector<FieldElem> coeffs_;
};

VPoly operator*(const VPoly& a, const VPoly& b);
inline VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
inline VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
inline VPoly operator*(VPoly a, const FieldElem& c) { return a *= c; }

/// out += a * b * scale, skipping work on zero coefficients.
void multiply_accumulate(VPoly& out, const VPoly& a, const VPoly& b, const BigRational& scale);

}  // namespace unclosed
