#pragma once

// Monodromy action of G on H_n(C^n, A u L) = Z^2 with basis (a, b).
// a and b are the two real half-balls cut from the unit ball by the base
// hyperplane {z1 = 0}; a lies in z1 > 0. A class u*a + v*b is the column
// vector (u, v). The columns of a generator's matrix are the images of a
// and b.

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "qmono/group.hpp"

namespace qmono {

enum class Parity { Even, Odd };

// n >= 2; throws DimensionTooSmall otherwise.
Parity parity_of(int n);
const char* parity_name(Parity p);

struct LatticePoint {
  std::int64_t u = 0;
  std::int64_t v = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// 2x2 integer matrix; all arithmetic is overflow-checked and throws
// ArithmeticOverflow instead of wrapping.
struct MonodromyMatrix {
  std::int64_t m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static MonodromyMatrix identity() { return {}; }

  std::int64_t det() const;
  MonodromyMatrix operator*(const MonodromyMatrix& o) const;
  LatticePoint operator*(const LatticePoint& x) const;
  // Exact inverse; valid because det is +-1 for every matrix built here.
  MonodromyMatrix inverse() const;

  friend bool operator==(const MonodromyMatrix&, const MonodromyMatrix&) = default;
  friend auto operator<=>(const MonodromyMatrix&, const MonodromyMatrix&) = default;
};

std::string format_matrix(const MonodromyMatrix& m);

MonodromyMatrix generator_matrix(Letter l, Parity p);
MonodromyMatrix generator_matrix(Gen g, Parity p);

// matrix_of(g1 g2 ... gm) = M(g1) M(g2) ... M(gm): the leftmost loop's matrix
// is applied last to column vectors. A homomorphism G -> GL(2, Z).
MonodromyMatrix matrix_of(const GroupWord& g, Parity p);
MonodromyMatrix matrix_of_letters(std::span<const Letter> letters, Parity p);

LatticePoint apply(const GroupWord& g, const LatticePoint& x, Parity p);

// (1, 1), i.e. a + b: fixed by every element in both parities.
LatticePoint invariant_line(Parity p);

int determinant_character(const GroupWord& g, Parity p);

// Scalar by which g acts on Z^2 / <a + b>, identified with Z via u - v.
int quotient_character(const GroupWord& g, Parity p);

}  // namespace qmono
