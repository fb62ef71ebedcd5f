#pragma once

// Rank bookkeeping for the homology of the pair (C^n, A u L), A a smooth
// affine quadric and L a generic hyperplane. A is homotopy equivalent to
// S^{n-1}, A n L to S^{n-2}, and L is contractible. All groups involved are
// free, so ranks determine them.

#include <map>

namespace qmono {

using RankMap = std::map<int, int>;  // degree -> rank, zero ranks omitted

// Unreduced homology of S^k; S^0 is two points.
RankMap sphere_homology(int k);

// Rank of the middle term of 0 -> Z^left -> H -> Z^right -> 0.
int solve_split_extension(int left_rank, int right_rank);

struct HomologyTable {
  int n = 0;
  RankMap relative;      // H_i(C^n, A u L)
  RankMap absolute;      // reduced H_i(A u L)
  RankMap quadric;       // H_i(A), unreduced
  RankMap hyperplane;    // H_i(L), unreduced
  RankMap intersection;  // H_i(A n L), unreduced
};

HomologyTable homology_table(int n);

inline int rank_at(const RankMap& m, int degree) {
  const auto it = m.find(degree);
  return it == m.end() ? 0 : it->second;
}

}  // namespace qmono
