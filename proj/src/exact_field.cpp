#include "unclosed/exact_field.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace unclosed {

namespace {

constexpr std::array<const char*, FieldElem::kDim> kBasisNames = {
    "1", "d", "d2", "d3", "i", "id", "id2", "id3"};

// Multiplication table for d^a i^b: index of the product and a sign/scale
// factor from d^4 = 5 and i^2 = -1.
struct Product {
  int index;
  long factor;
};

constexpr Product basis_product(int x, int y) {
  const int a = (x % 4) + (y % 4);
  const int b = (x / 4) + (y / 4);
  long factor = 1;
  int da = a;
  if (da >= 4) {
    da -= 4;
    factor *= 5;
  }
  int ib = b;
  if (ib >= 2) {
    ib -= 2;
    factor = -factor;
  }
  return {da + 4 * ib, factor};
}

constexpr auto make_table() {
  std::array<std::array<Product, FieldElem::kDim>, FieldElem::kDim> t{};
  for (int x = 0; x < FieldElem::kDim; ++x)
    for (int y = 0; y < FieldElem::kDim; ++y) t[x][y] = basis_product(x, y);
  return t;
}

constexpr auto kTable = make_table();

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

const char* to_string(SubfieldTag tag) {
  switch (tag) {
    case SubfieldTag::Rational:
      return "RATIONAL";
    case SubfieldTag::Sqrt5:
      return "SQRT5";
    case SubfieldTag::Full:
      return "FULL";
  }
  return "?";
}

FieldElem::FieldElem(long value) { coords_[0] = value; }

FieldElem::FieldElem(const BigRational& value) { coords_[0] = value; }

FieldElem FieldElem::basis(int a, int b) {
  if (a < 0 || a > 3 || b < 0 || b > 1) throw std::out_of_range("basis index");
  FieldElem e;
  e.coords_[a + 4 * b] = 1;
  return e;
}

FieldElem FieldElem::phi() {
  FieldElem e;
  e.coords_[0] = BigRational(1, 2);
  e.coords_[2] = BigRational(1, 2);
  return e;
}

bool FieldElem::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (coords_[0] != 1) return false;
  for (int k = 1; k < kDim; ++k)
    if (coords_[k] != 0) return false;
  return true;
}

bool FieldElem::is_real() const {
  for (int k = 4; k < kDim; ++k)
    if (coords_[k] != 0) return false;
  return true;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  for (int k = 0; k < kDim; ++k)
    if (rhs.coords_[k] != 0) coords_[k] += rhs.coords_[k];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  for (int k = 0; k < kDim; ++k)
    if (rhs.coords_[k] != 0) coords_[k] -= rhs.coords_[k];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  Coords out{};
  BigRational tmp;
  for (int x = 0; x < kDim; ++x) {
    if (coords_[x] == 0) continue;
    for (int y = 0; y < kDim; ++y) {
      if (rhs.coords_[y] == 0) continue;
      const Product p = kTable[x][y];
      tmp = coords_[x] * rhs.coords_[y];
      if (p.factor != 1) tmp *= p.factor;
      out[p.index] += tmp;
    }
  }
  coords_ = std::move(out);
  return *this;
}

FieldElem& FieldElem::operator*=(const BigRational& rhs) {
  for (auto& c : coords_)
    if (c != 0) c *= rhs;
  return *this;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElem FieldElem::conjugate(int k, int sign) const {
  // d^a i^b -> (i^k d)^a (sign i)^b = sign^b d^a i^(k a + b)
  FieldElem r;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      const BigRational& c = coords_[a + 4 * b];
      if (c == 0) continue;
      const int ipow = ((k * a + b) % 4 + 4) % 4;
      BigRational v = c;
      if (sign < 0 && b == 1) v = -v;
      if (ipow >= 2) v = -v;
      r.coords_[a + 4 * (ipow % 2)] += v;
    }
  }
  return r;
}

BigRational FieldElem::norm() const {
  FieldElem prod = *this;
  for (int k = 0; k < 4; ++k)
    for (int sign : {1, -1})
      if (!(k == 0 && sign == 1)) prod *= conjugate(k, sign);
  return prod.coords_[0];
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  FieldElem others(1L);
  for (int k = 0; k < 4; ++k)
    for (int sign : {1, -1})
      if (!(k == 0 && sign == 1)) others *= conjugate(k, sign);
  const FieldElem full = *this * others;
  // full is the norm, a nonzero rational.
  others *= BigRational(1) / full.coords_[0];
  return others;
}

FieldElem FieldElem::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElem result(1L);
  FieldElem base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

FieldElem field_add(const FieldElem& a, const FieldElem& b) { return a + b; }
FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
FieldElem field_inv(const FieldElem& a) { return a.inverse(); }

Complex field_embed(const FieldElem& a, unsigned digits) {
  if (digits < 1) throw std::invalid_argument("field_embed: precision must be >= 1 digit");
  const Bits prec = bits_for_digits(digits + 10);
  const BigFloat d = root(BigFloat(5L, prec), 4);
  BigFloat re(prec), im(prec);
  BigFloat dpow(1L, prec);
  for (int p = 0; p < 4; ++p) {
    if (a.coord(p) != 0) re += BigFloat(a.coord(p), prec) * dpow;
    if (a.coord(p + 4) != 0) im += BigFloat(a.coord(p + 4), prec) * dpow;
    dpow *= d;
  }
  const Bits out = bits_for_digits(digits);
  return {re.rounded_to(out), im.rounded_to(out)};
}

SubfieldTag subfield_of(const FieldElem& a) {
  bool sqrt5 = false;
  for (int k = 1; k < FieldElem::kDim; ++k) {
    if (a.coord(k) == 0) continue;
    if (k == 2)
      sqrt5 = true;
    else
      return SubfieldTag::Full;
  }
  return sqrt5 ? SubfieldTag::Sqrt5 : SubfieldTag::Rational;
}

std::string rational_string(const BigRational& q) { return q.get_str(10); }

std::string render(const FieldElem& a) {
  switch (subfield_of(a)) {
    case SubfieldTag::Rational:
      return rational_string(a.coord(0));
    case SubfieldTag::Sqrt5:
      return rational_string(a.coord(0)) + " + " + rational_string(a.coord(2)) + "·√5";
    case SubfieldTag::Full:
      break;
  }
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < FieldElem::kDim; ++k) {
    if (a.coord(k) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rational_string(a.coord(k));
    if (k != 0) os << "·" << kBasisNames[k];
  }
  return os.str();
}

nlohmann::json to_json(const FieldElem& a) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : a.coords())
    coords.push_back({c.get_num().get_str(10), c.get_den().get_str(10)});
  return {{"basis", kBasisNames}, {"coords", coords}};
}

FieldElem field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array() ||
      j.at("coords").size() != FieldElem::kDim) {
    throw std::invalid_argument("field element JSON needs 8 coords");
  }
  if (j.contains("basis")) {
    const auto& basis = j.at("basis");
    if (!basis.is_array() || basis.size() != FieldElem::kDim)
      throw std::invalid_argument("field element JSON basis must list 8 names");
    for (int k = 0; k < FieldElem::kDim; ++k)
      if (basis[k] != kBasisNames[k]) throw std::invalid_argument("unexpected basis order");
  }
  FieldElem::Coords coords;
  for (int k = 0; k < FieldElem::kDim; ++k) {
    const auto& pair = j.at("coords")[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw std::invalid_argument("coordinate must be [\"num\",\"den\"]");
    try {
      coords[k] = make_rational(BigInt(pair[0].get<std::string>(), 10),
                                BigInt(pair[1].get<std::string>(), 10));
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(e.what());
    }
  }
  return FieldElem(std::move(coords));
}

}  // namespace unclosed
