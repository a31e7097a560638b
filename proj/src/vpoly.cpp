#include "unclosed/vpoly.hpp"

#include <algorithm>

namespace unclosed {

VPoly::VPoly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

VPoly::VPoly(const FieldElem& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

VPoly VPoly::monomial(const FieldElem& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<FieldElem> coeffs(static_cast<size_t>(degree) + 1);
  coeffs.back() = c;
  return VPoly(std::move(coeffs));
}

FieldElem VPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[k];
}

void VPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

VPoly& VPoly::operator+=(const VPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

VPoly& VPoly::operator*=(const FieldElem& c) {
  for (auto& x : coeffs_)
    if (!x.is_zero()) x *= c;
  trim();
  return *this;
}

VPoly& VPoly::operator*=(const BigRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

VPoly VPoly::operator-() const {
  VPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

VPoly VPoly::scale_variable(const FieldElem& c) const {
  VPoly r = *this;
  FieldElem power(1L);
  for (auto& x : r.coeffs_) {
    if (!x.is_zero()) x *= power;
    power *= c;
  }
  r.trim();
  return r;
}

Complex VPoly::evaluate(const Complex& v, unsigned digits) const {
  Complex acc(BigFloat(bits_for_digits(digits)));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= v;
    acc += field_embed(*it, digits);
  }
  return acc;
}

void multiply_accumulate(VPoly& out, const VPoly& a, const VPoly& b, const BigRational& scale) {
  if (a.is_zero() || b.is_zero()) return;
  if (&out == &a || &out == &b) {
    const VPoly ca = a, cb = b;
    multiply_accumulate(out, ca, cb, scale);
    return;
  }
  std::vector<FieldElem>& acc = out.coeffs_;
  const size_t need = a.coeffs().size() + b.coeffs().size() - 1;
  if (acc.size() < need) acc.resize(need);
  const bool unit = scale == 1;
  for (size_t x = 0; x < a.coeffs().size(); ++x) {
    const FieldElem& ax = a.coeffs()[x];
    if (ax.is_zero()) continue;
    FieldElem scaled = ax;
    if (!unit) scaled *= scale;
    for (size_t y = 0; y < b.coeffs().size(); ++y) {
      const FieldElem& by = b.coeffs()[y];
      if (by.is_zero()) continue;
      acc[x + y] += scaled * by;
    }
  }
  out.trim();
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  VPoly out;
  multiply_accumulate(out, a, b, BigRational(1));
  return out;
}

}  // namespace unclosed
