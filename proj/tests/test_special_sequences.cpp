#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unclosed/numeric_eval.hpp"
#include "unclosed/special_sequences.hpp"

#include <vector>

using namespace unclosed;

namespace {

using IntPoly = std::vector<BigInt>;  // coefficient k holds w^k

// Li_{-n}(w) = P_n(w) / (1 - w)^(n+1) with P_0 = w and
//   P_{n+1} = w * (P_n' (1 - w) + (n + 1) P_n),
// obtained by applying w d/dw to the rational form.
IntPoly next_numerator(const IntPoly& p, int n) {
  IntPoly out(p.size() + 1);
  for (size_t k = 0; k < p.size(); ++k) {
    // w * P'(w) * (1 - w): k p_k w^k - k p_k w^(k+1)
    out[k] += BigInt(static_cast<long>(k)) * p[k];
    out[k + 1] -= BigInt(static_cast<long>(k)) * p[k];
    // w * (n+1) P(w)
    out[k + 1] += BigInt(n + 1) * p[k];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

FieldElem eval_rational_form(const IntPoly& p, int n, const FieldElem& w) {
  FieldElem num;
  FieldElem power(1L);
  for (const auto& c : p) {
    num += power * FieldElem(BigRational(c));
    power *= w;
  }
  return num / (FieldElem(1L) - w).pow(n + 1);
}

// Akiyama-Tanigawa; yields B_1 = +1/2, all other values standard.
std::vector<BigRational> akiyama_tanigawa(int n_max) {
  std::vector<BigRational> out;
  std::vector<BigRational> a(static_cast<size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[m] = BigRational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[j - 1] = BigRational(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

}  // namespace

TEST_CASE("Eulerian rows") {
  CHECK(eulerian_row(0) == std::vector<BigInt>{1});
  CHECK(eulerian_row(1) == std::vector<BigInt>{1});
  CHECK(eulerian_row(2) == std::vector<BigInt>{1, 1});
  CHECK(eulerian_row(3) == std::vector<BigInt>{1, 4, 1});
  CHECK(eulerian_row(4) == std::vector<BigInt>{1, 11, 11, 1});
  for (int n = 1; n <= 25; ++n) {
    const auto row = eulerian_row(n);
    BigInt sum = 0;
    for (const auto& a : row) sum += a;
    CHECK(sum == factorial(n));
    if (n >= 2) {
      const auto prev = eulerian_row(n - 1);
      for (int k = 0; k < n; ++k) {
        const BigInt left = k < static_cast<int>(prev.size()) ? prev[k] : BigInt(0);
        const BigInt right = k >= 1 ? prev[k - 1] : BigInt(0);
        CHECK(row[k] == (k + 1) * left + (n - k) * right);
      }
    }
  }
}

TEST_CASE("polylogarithms of negative order") {
  const FieldElem phi = FieldElem::phi();
  const FieldElem phi_inv = phi - FieldElem(1L);
  CHECK(polylog_neg(0, phi_inv) == phi);
  CHECK(polylog_neg(0, -phi) == -phi_inv);
  CHECK_THROWS_AS(polylog_neg(2, FieldElem(1L)), DivisionByZero);

  // Li_{-1}(1/3) = (1/3)/(2/3)^2 = 3/4
  CHECK(polylog_neg(1, FieldElem(make_rational(1, 3))) == FieldElem(make_rational(3, 4)));
}

TEST_CASE("w d/dw maps Li_{-n} to Li_{-n-1} on the rational form") {
  const std::vector<FieldElem> points = {FieldElem::phi() - FieldElem(1L), -FieldElem::phi(),
                                         FieldElem(make_rational(1, 3)), FieldElem(make_rational(-5, 2))};
  IntPoly p = {0, 1};
  for (int n = 0; n <= 6; ++n) {
    IntPoly from_rows(static_cast<size_t>(n) + 2);
    const auto row = eulerian_row(n);
    for (size_t k = 0; k < row.size(); ++k) from_rows[k + 1] = row[k];
    if (n == 0) from_rows = {0, 1};
    while (!from_rows.empty() && from_rows.back() == 0) from_rows.pop_back();
    CHECK(p == from_rows);
    for (const auto& w : points) CHECK(polylog_neg(n, w) == eval_rational_form(p, n, w));
    p = next_numerator(p, n);
  }
}

TEST_CASE("Li_{-n}(1/3) against its defining series") {
  for (int n = 0; n <= 5; ++n) {
    BigRational sum = 0;
    BigRational pow3(1, 3);
    for (long k = 1; k <= 400; ++k) {
      BigInt kn;
      mpz_pow_ui(kn.get_mpz_t(), BigInt(k).get_mpz_t(), static_cast<unsigned long>(n));
      sum += BigRational(kn) * pow3;
      pow3 /= 3;
    }
    const FieldElem exact = polylog_neg(n, FieldElem(make_rational(1, 3)));
    const BigRational diff = exact.coord(0) - sum;
    CHECK(abs(diff) < BigRational(1, BigInt("1000000000000000000000000000000000000000")));
  }
}

TEST_CASE("Bernoulli numbers") {
  const auto b = bernoulli_numbers(40);
  CHECK(b[0] == 1);
  CHECK(b[1] == BigRational(-1, 2));
  CHECK(b[2] == BigRational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[12] == BigRational(-691, 2730));
  const auto at = akiyama_tanigawa(40);
  for (int n = 0; n <= 40; ++n) {
    if (n == 1) continue;
    CHECK(b[n] == at[n]);
  }
  for (int n = 1; n <= 39; ++n) {
    BigRational sum = 0;
    for (int j = 0; j <= n; ++j) sum += BigRational(binomial(n + 1, j)) * b[j];
    CHECK(sum == 0);
  }
}

TEST_CASE("shifted Bernoulli polynomials") {
  CHECK(bernoulli_poly_shifted(0) == VPoly(FieldElem(1L)));
  CHECK(bernoulli_poly_shifted(1) == VPoly::monomial(FieldElem::i(), 1));
  CHECK(bernoulli_poly_shifted(2) ==
        VPoly({FieldElem(make_rational(-1, 12)), FieldElem(), FieldElem(-1L)}));

  const auto b = bernoulli_numbers(30);
  for (int n = 0; n <= 30; ++n) {
    const VPoly p = bernoulli_poly_shifted(n);
    CHECK(p.degree() == n);
    // B_n(1/2) = (2^(1-n) - 1) B_n
    BigRational half_value = (BigRational(2, 1) / BigRational(BigInt(1) << n) - 1) * b[n];
    half_value.canonicalize();
    CHECK(p.coeff(0) == FieldElem(half_value));
    // Coefficient of v^j lies in i^j Q; odd-degree terms vanish for even n.
    for (int j = 0; j <= n; ++j) {
      const FieldElem c = p.coeff(j) * FieldElem::i().pow(-j);
      CHECK(subfield_of(c) == SubfieldTag::Rational);
      if ((n - j) % 2 == 1) CHECK(p.coeff(j).is_zero());
    }
  }
}

TEST_CASE("E_n values") {
  CHECK(en_value(0) == FieldElem::sqrt5());
  CHECK(en_value(1) == FieldElem(4L));
  CHECK(en_value(2) == FieldElem::sqrt5() * FieldElem(8L));
  const SequenceTables& t = default_tables();
  for (int n = 0; n <= 40; ++n) {
    CHECK(t.en(n) == en_value(n));
    CHECK(t.en(n).is_real());
    CHECK(subfield_of(t.en(n)) != SubfieldTag::Full);
  }
}

TEST_CASE("observed: odd-index E_n are rational, even-index are rational multiples of sqrt5") {
  for (int n = 0; n <= 40; ++n) {
    const FieldElem e = en_value(n);
    if (n % 2 == 1) {
      CHECK(subfield_of(e) == SubfieldTag::Rational);
    } else {
      CHECK(e.coord(0) == 0);
      CHECK(subfield_of(e) == SubfieldTag::Sqrt5);
    }
  }
}

TEST_CASE("E_{-1} vanishes and E_{-2} = pi^2/5 numerically") {
  const Bits prec = bits_for_digits(40);
  const BigFloat e_minus1 = li1(PolylogArg::PhiInverse, prec) + li1(PolylogArg::MinusPhi, prec);
  CHECK(abs(e_minus1) < BigFloat::parse("1e-25", prec));
  const BigFloat pi = BigFloat::pi(prec);
  const BigFloat e_minus2 = li2(PolylogArg::PhiInverse, prec) - li2(PolylogArg::MinusPhi, prec);
  CHECK(abs(e_minus2 - pi * pi / 5L) < BigFloat::parse("1e-35", prec));
}

TEST_CASE("tables") {
  const SequenceTables t(10);
  CHECK(t.max_order() == 10);
  CHECK(t.bernoulli().size() == 12);
  CHECK(t.eulerian_row(3) == eulerian_row(3));
  CHECK_THROWS(t.en(11));
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(10) == 3628800);
}
