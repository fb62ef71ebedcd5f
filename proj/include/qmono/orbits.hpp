#pragma once

// Bounded orbit enumeration of the monodromy group on Z^2.

#include <cstdint>
#include <set>
#include <vector>

#include "qmono/representation.hpp"

namespace qmono {

// The generator matrices and their inverses: M_a^{+-1}, M_b^{+-1}, M_k.
std::vector<MonodromyMatrix> orbit_maps(Parity p);

// Points reachable from start by at most max_word_len generator steps,
// sorted. The frontier is expanded with the parallel kernel.
std::vector<LatticePoint> orbit_bfs(LatticePoint start, Parity p,
                                    int max_word_len);
// Reference implementation: one point at a time, std::set bookkeeping.
std::vector<LatticePoint> orbit_bfs_serial(LatticePoint start, Parity p,
                                           int max_word_len);

struct OrbitReport {
  LatticePoint start;
  Parity parity = Parity::Even;
  int max_word_len = 0;
  int box_radius = 0;
  std::vector<LatticePoint> reached;     // whole BFS result
  std::vector<LatticePoint> claimed;     // |u - v| = |u0 - v0| within the box
  std::vector<LatticePoint> missing;     // claimed but not reached
  std::vector<LatticePoint> extraneous;  // reached with |u - v| != |u0 - v0|
};

// Checks the orbit of start against the line pair |u - v| = |u0 - v0|
// inside the box max(|u|, |v|) <= box_radius. Even parity only
// (OddParityClaim otherwise).
OrbitReport verify_orbit_claim(int box_radius, int max_word_len, Parity p,
                               LatticePoint start = {1, 0});

}  // namespace qmono
