#include "unclosed/series.hpp"

#include <string>

namespace unclosed {

namespace {

void require_same_order(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.trunc_order() != b.trunc_order())
    throw OrderMismatch("series truncation orders differ: " + std::to_string(a.trunc_order()) +
                        " vs " + std::to_string(b.trunc_order()));
}

const VPoly& zero_poly() {
  static const VPoly zero;
  return zero;
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(int trunc_order) : trunc_order_(trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("truncation order must be >= 0");
  terms_.resize(static_cast<size_t>(trunc_order) + 1);
}

const VPoly& PuiseuxSeries::term(int m) const {
  if (m < 0 || m > trunc_order_) return zero_poly();
  return terms_[m];
}

void PuiseuxSeries::set_term(int m, VPoly p) {
  if (m < 0) throw std::invalid_argument("negative power of t");
  if (m > trunc_order_) return;
  terms_[m] = std::move(p);
}

void PuiseuxSeries::add_to_term(int m, const VPoly& p) {
  if (m < 0) throw std::invalid_argument("negative power of t");
  if (m > trunc_order_) return;
  terms_[m] += p;
}

bool PuiseuxSeries::is_zero() const {
  for (const auto& p : terms_)
    if (!p.is_zero()) return false;
  return true;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& rhs) {
  require_same_order(*this, rhs);
  for (int m = 0; m <= trunc_order_; ++m) terms_[m] += rhs.terms_[m];
  return *this;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& p : r.terms_) p = -p;
  return r;
}

PuiseuxSeries series_add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries r = a;
  r += b;
  return r;
}

PuiseuxSeries series_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  require_same_order(a, b);
  const int n = a.trunc_order();
  PuiseuxSeries r(n);
  const BigRational one(1);
  for (int m = 0; m <= n; ++m) {
    VPoly acc;
    for (int k = 0; k <= m; ++k) multiply_accumulate(acc, a.term(k), b.term(m - k), one);
    r.set_term(m, std::move(acc));
  }
  return r;
}

PuiseuxSeries series_exp(const PuiseuxSeries& a) {
  if (!a.term(0).is_zero()) throw std::invalid_argument("series_exp: constant term must vanish");
  // With E = exp(A): E' = A' E, so n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
  const int n = a.trunc_order();
  PuiseuxSeries e(n);
  e.set_term(0, VPoly(FieldElem(1L)));
  for (int m = 1; m <= n; ++m) {
    VPoly acc;
    for (int k = 1; k <= m; ++k)
      multiply_accumulate(acc, a.term(k), e.term(m - k), make_rational(k, m));
    e.set_term(m, std::move(acc));
  }
  return e;
}

PuiseuxSeries series_log(const PuiseuxSeries& a) {
  const VPoly& c0 = a.term(0);
  if (!(c0.degree() == 0 && c0.coeff(0).is_one()))
    throw std::invalid_argument("series_log: constant term must be exactly 1");
  // With L = log(A): A' = A L', so n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
  const int n = a.trunc_order();
  PuiseuxSeries l(n);
  for (int m = 1; m <= n; ++m) {
    VPoly acc = a.term(m);
    for (int k = 1; k < m; ++k)
      multiply_accumulate(acc, l.term(k), a.term(m - k), make_rational(-k, m));
    l.set_term(m, std::move(acc));
  }
  return l;
}

PuiseuxSeries build_J_substituted(int N, int trunc_order, const SequenceTables& tables) {
  if (N < 2) throw std::invalid_argument("build_J_substituted: N must be >= 2");
  if (N - 1 > tables.max_order())
    throw std::out_of_range("build_J_substituted: N exceeds the E_n table");
  PuiseuxSeries out(trunc_order);
  const FieldElem d_inv = FieldElem::d().inverse();
  for (int k = 2; k <= N; ++k) {
    // Lowest power contributed by this k is t^(k-1).
    if (k - 1 > trunc_order) break;
    VPoly b = bernoulli_poly_shifted(k + 1);
    b *= BigRational(1) / BigRational(factorial(k + 1));
    b *= tables.en(k - 1);
    const VPoly scaled = b.scale_variable(d_inv);
    for (int j = 0; j <= scaled.degree(); ++j) {
      const FieldElem& c = scaled.coeffs()[j];
      if (c.is_zero()) continue;
      const int power = 2 * k - j;
      if (power < 0) throw std::logic_error("build_J_substituted: negative power of t");
      out.add_to_term(power, VPoly::monomial(c, j));
    }
  }
  return out;
}

GaussianMoments::GaussianMoments(int max_m) {
  moments_.push_back(BigRational(1));
  for (int m = 1; m <= max_m; ++m) moments_.push_back(moments_.back() * (2 * m - 1));
}

BigRational GaussianMoments::moment(int m) {
  while (static_cast<int>(moments_.size()) <= m) {
    const int k = static_cast<int>(moments_.size());
    moments_.push_back(moments_.back() * (2 * k - 1));
  }
  return moments_[m];
}

FieldElem gaussian_integrate(const VPoly& p) {
  GaussianMoments moments(p.degree() / 2 + 1);
  FieldElem acc;
  for (int k = 0; k <= p.degree(); k += 2) {
    const FieldElem& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    FieldElem term = c;
    term *= moments.moment(k / 2);
    acc += term;
  }
  return acc;
}

nlohmann::json series_to_json(const PuiseuxSeries& s) {
  nlohmann::json out = nlohmann::json::object();
  for (int m = 0; m <= s.trunc_order(); ++m) {
    const VPoly& p = s.term(m);
    if (p.is_zero()) continue;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c).at("coords"));
    out["t^" + std::to_string(m)] = std::move(coeffs);
  }
  return out;
}

}  // namespace unclosed
