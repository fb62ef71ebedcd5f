#include "qmono/representation.hpp"

#include <sstream>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::ArithmeticOverflow, "64-bit multiply overflow");
  }
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::ArithmeticOverflow, "64-bit add overflow");
  }
  return r;
}

std::int64_t neg(std::int64_t a) { return mul(a, -1); }

constexpr MonodromyMatrix kSwap{0, 1, 1, 0};
// alpha(a) = -a, alpha(b) = 2a + b
constexpr MonodromyMatrix kAlphaEven{-1, 2, 0, 1};
// beta(a) = a + 2b, beta(b) = -b
constexpr MonodromyMatrix kBetaEven{1, 0, 2, -1};

}  // namespace

Parity parity_of(int n) {
  if (n < 2) {
    throw Error(ErrorKind::DimensionTooSmall, "dimension must be at least 2");
  }
  return n % 2 == 0 ? Parity::Even : Parity::Odd;
}

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::int64_t MonodromyMatrix::det() const {
  return add(mul(m11, m22), neg(mul(m12, m21)));
}

MonodromyMatrix MonodromyMatrix::operator*(const MonodromyMatrix& o) const {
  return {add(mul(m11, o.m11), mul(m12, o.m21)),
          add(mul(m11, o.m12), mul(m12, o.m22)),
          add(mul(m21, o.m11), mul(m22, o.m21)),
          add(mul(m21, o.m12), mul(m22, o.m22))};
}

LatticePoint MonodromyMatrix::operator*(const LatticePoint& x) const {
  return {add(mul(m11, x.u), mul(m12, x.v)), add(mul(m21, x.u), mul(m22, x.v))};
}

MonodromyMatrix MonodromyMatrix::inverse() const {
  const std::int64_t d = det();
  if (d != 1 && d != -1) {
    throw Error(ErrorKind::ArithmeticOverflow, "matrix is not unimodular");
  }
  // d^-1 = d for d = +-1
  return {mul(d, m22), mul(d, neg(m12)), mul(d, neg(m21)), mul(d, m11)};
}

std::string format_matrix(const MonodromyMatrix& m) {
  std::ostringstream os;
  os << "[[" << m.m11 << ", " << m.m12 << "], [" << m.m21 << ", " << m.m22
     << "]]";
  return os.str();
}

MonodromyMatrix generator_matrix(Gen g, Parity p) {
  switch (g) {
    case Gen::Kappa: return kSwap;
    case Gen::Alpha: return p == Parity::Even ? kAlphaEven : MonodromyMatrix{};
    case Gen::Beta: return p == Parity::Even ? kBetaEven : MonodromyMatrix{};
  }
  return {};
}

MonodromyMatrix generator_matrix(Letter l, Parity p) {
  const MonodromyMatrix m = generator_matrix(l.gen, p);
  return l.exp < 0 ? m.inverse() : m;
}

MonodromyMatrix matrix_of_letters(std::span<const Letter> letters, Parity p) {
  MonodromyMatrix acc;
  for (const Letter& l : letters) acc = acc * generator_matrix(l, p);
  return acc;
}

MonodromyMatrix matrix_of(const GroupWord& g, Parity p) {
  return matrix_of_letters(g.letters(), p);
}

LatticePoint apply(const GroupWord& g, const LatticePoint& x, Parity p) {
  return matrix_of(g, p) * x;
}

LatticePoint invariant_line(Parity) { return {1, 1}; }

// Every even-parity generator has det -1; odd parity only k does.
int determinant_character(const GroupWord& g, Parity p) {
  const std::size_t flips =
      p == Parity::Even ? g.length() : (g.kappa ? 1u : 0u);
  return flips % 2 == 0 ? 1 : -1;
}

// Even parity: every generator negates u - v. Odd parity: only the swap does.
int quotient_character(const GroupWord& g, Parity p) {
  const std::size_t flips =
      p == Parity::Even ? g.length() : (g.kappa ? 1u : 0u);
  return flips % 2 == 0 ? 1 : -1;
}

}  // namespace qmono
