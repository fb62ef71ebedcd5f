#include "qmono/homology.hpp"

#include <stdexcept>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

RankMap reduced(RankMap m) {
  if (--m[0] == 0) m.erase(0);
  return m;
}

void put(RankMap& m, int degree, int rank) {
  if (rank != 0) m[degree] = rank;
}

}  // namespace

RankMap sphere_homology(int k) {
  if (k < 0) throw Error(ErrorKind::NegativeDimension, "sphere dimension < 0");
  if (k == 0) return {{0, 2}};
  return {{0, 1}, {k, 1}};
}

int solve_split_extension(int left_rank, int right_rank) {
  if (left_rank < 0 || right_rank < 0) {
    throw Error(ErrorKind::BadParameters, "ranks must be non-negative");
  }
  return left_rank + right_rank;
}

HomologyTable homology_table(int n) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "n must be at least 2");

  HomologyTable t;
  t.n = n;
  t.quadric = sphere_homology(n - 1);
  t.hyperplane = {{0, 1}};
  t.intersection = sphere_homology(n - 2);

  const RankMap ra = reduced(t.quadric);
  const RankMap rl = reduced(t.hyperplane);
  const RankMap ri = reduced(t.intersection);

  // Reduced Mayer-Vietoris:
  //   H_i(A n L) -f_i-> H_i(A) + H_i(L) -> H_i(A u L) -> H_{i-1}(A n L) -f_{i-1}->
  // gives 0 -> coker f_i -> H_i(A u L) -> ker f_{i-1} -> 0. The spheres sit
  // in different degrees, so every f_i has a zero source or target.
  auto map_is_zero = [&](int i) {
    return rank_at(ri, i) == 0 ||
           rank_at(ra, i) + rank_at(rl, i) == 0;
  };
  const int top = 2 * n;  // real dimension of C^n
  for (int i = 0; i <= top; ++i) {
    if (!map_is_zero(i) || (i > 0 && !map_is_zero(i - 1))) {
      throw std::logic_error("Mayer-Vietoris map not determined by ranks");
    }
    const int coker = rank_at(ra, i) + rank_at(rl, i);
    const int ker = i > 0 ? rank_at(ri, i - 1) : 0;
    put(t.absolute, i, solve_split_extension(coker, ker));
  }
  // C^n is contractible: H_i(C^n, A u L) = reduced H_{i-1}(A u L).
  for (int i = 1; i <= top; ++i) put(t.relative, i, rank_at(t.absolute, i - 1));
  return t;
}

}  // namespace qmono
