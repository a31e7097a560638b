#include "unclosed/bigfloat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace unclosed {

namespace {

constexpr Bits kDefaultBits = 64;

// Unary MPFR kernels share one shape; the result keeps the input precision.
template <typename Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Bits bits_for_digits(unsigned digits) {
  return static_cast<Bits>(std::ceil(digits * 3.3219280948873623)) + 16;
}

BigFloat::BigFloat() : BigFloat(kDefaultBits) {}

BigFloat::BigFloat(Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(int value, Bits prec) : BigFloat(static_cast<long>(value), prec) {}

BigFloat::BigFloat(long value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, Bits prec) {
  BigFloat r(prec);
  std::string buf(text);
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(r.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end != buf.c_str() + buf.size() || !r.is_finite()) {
    throw std::invalid_argument("not a decimal number: '" + buf + "'");
  }
  return r;
}

BigFloat BigFloat::pi(Bits prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::zeta(unsigned long n, Bits prec) {
  BigFloat r(prec);
  mpfr_zeta_ui(r.value_, n, MPFR_RNDN);
  return r;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded_to(Bits prec) const {
  BigFloat r(prec);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

void BigFloat::widen_to(Bits prec) {
  if (prec > precision()) mpfr_prec_round(value_, prec, MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat expm1(const BigFloat& x) { return unary(x, mpfr_expm1); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }

BigFloat root(const BigFloat& x, unsigned long k) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return (a < b) ? b : a; }

Complex::Complex(const BigFloat& real) : re(real), im(real.precision()) {}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  BigFloat r = re * rhs.re - im * rhs.im;
  im = re * rhs.im + im * rhs.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  const BigFloat den = rhs.norm();
  BigFloat r = (re * rhs.re + im * rhs.im) / den;
  im = (im * rhs.re - re * rhs.im) / den;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const BigFloat& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const BigFloat& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

BigFloat Complex::norm() const { return re * re + im * im; }

BigFloat Complex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

BigFloat Complex::arg() const { return atan2(im, re); }

Complex exp(const Complex& z) {
  const BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(z.abs()), z.arg()}; }

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(BigFloat(1, z.precision())) / pow(z, -n);
  Complex result(BigFloat(1, z.precision()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace unclosed
