#include "qmono/orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>

#include "qmono/errors.hpp"
#include "qmono/kernels.hpp"

namespace qmono {

namespace {

std::int64_t abs_diff(const LatticePoint& x) {
  const std::int64_t d = x.u - x.v;
  return d < 0 ? -d : d;
}

void check_len(int max_word_len) {
  if (max_word_len < 0) {
    throw Error(ErrorKind::BadParameters, "max_word_len must be >= 0");
  }
}

}  // namespace

std::vector<MonodromyMatrix> orbit_maps(Parity p) {
  const MonodromyMatrix a = generator_matrix(Gen::Alpha, p);
  const MonodromyMatrix b = generator_matrix(Gen::Beta, p);
  return {a, a.inverse(), b, b.inverse(), generator_matrix(Gen::Kappa, p)};
}

std::vector<LatticePoint> orbit_bfs(LatticePoint start, Parity p,
                                    int max_word_len) {
  check_len(max_word_len);
  const auto maps = orbit_maps(p);
  std::set<LatticePoint> seen{start};
  std::vector<LatticePoint> frontier{start};
  for (int step = 0; step < max_word_len && !frontier.empty(); ++step) {
    std::vector<LatticePoint> fresh;
    for (const LatticePoint& y : kernels::expand_frontier(frontier, maps)) {
      if (seen.insert(y).second) fresh.push_back(y);
    }
    frontier = std::move(fresh);
  }
  return {seen.begin(), seen.end()};
}

std::vector<LatticePoint> orbit_bfs_serial(LatticePoint start, Parity p,
                                           int max_word_len) {
  check_len(max_word_len);
  const auto maps = orbit_maps(p);
  std::set<LatticePoint> seen{start};
  std::vector<LatticePoint> frontier{start};
  for (int step = 0; step < max_word_len && !frontier.empty(); ++step) {
    std::vector<LatticePoint> next;
    for (const LatticePoint& x : frontier) {
      for (const MonodromyMatrix& m : maps) {
        const LatticePoint y = m * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

OrbitReport verify_orbit_claim(int box_radius, int max_word_len, Parity p,
                               LatticePoint start) {
  if (p != Parity::Even) {
    throw Error(ErrorKind::OddParityClaim,
                "the lattice orbit claim concerns even dimension only");
  }
  if (box_radius < 1) {
    throw Error(ErrorKind::BadParameters, "box_radius must be >= 1");
  }
  OrbitReport r;
  r.start = start;
  r.parity = p;
  r.max_word_len = max_word_len;
  r.box_radius = box_radius;
  r.reached = orbit_bfs(start, p, max_word_len);

  const std::int64_t target = abs_diff(start);
  for (std::int64_t u = -box_radius; u <= box_radius; ++u) {
    for (std::int64_t v = -box_radius; v <= box_radius; ++v) {
      const LatticePoint x{u, v};
      if (abs_diff(x) == target) r.claimed.push_back(x);
    }
  }
  std::set_difference(r.claimed.begin(), r.claimed.end(), r.reached.begin(),
                      r.reached.end(), std::back_inserter(r.missing));
  std::copy_if(r.reached.begin(), r.reached.end(),
               std::back_inserter(r.extraneous),
               [target](const LatticePoint& x) { return abs_diff(x) != target; });
  return r;
}

}  // namespace qmono
