#pragma once

// Classification of sampled loops of general-position hyperplanes.
//
// Projecting a hyperplane to its direction [c] fibres the space of generic
// hyperplanes over the space of non-asymptotic directions; the fibre is the
// pencil of parallel hyperplanes, a line punctured at the two tangent
// offsets d = +-sqrt(q). Carrying a branch s of sqrt(q) along the loop and
// using the fibre coordinate w = d / s puts the punctures of every fibre at
// +-1 and the base hyperplane {z1 = 0} at w = 0.
//
// * The k-bit records whether the branch comes back negated, i.e. whether
//   the two tangent members of the pencil were exchanged.
// * The free part is read off the closed fibre path 0 -> w_0 -> ... -> w_m
//   -> 0 from its crossings with the cuts (1, +inf) and (-inf, -1):
//     upward through (1, +inf)     -> a     downward -> a^-1
//     downward through (-inf, -1)  -> b     upward   -> b^-1
//   Points on the real axis count as the upper side.

#include <optional>
#include <span>
#include <vector>

#include "qmono/group.hpp"
#include "qmono/loops.hpp"
#include "qmono/representation.hpp"

namespace qmono {

// s_0 is the principal root, or the root nearer `start` when given; each
// later root is the one nearer the previous. Requires
// |q_{i+1} - q_i| < |q_i| (UndersampledLoop) and |q_i| > tol
// (AsymptoticSample).
std::vector<cplx> continue_sqrt_branch(std::span<const cplx> q,
                                       double tol = kDefaultTol,
                                       std::optional<cplx> start = std::nullopt);

// Root of q = sum c_i^2 that scales with the representative:
// oriented_root(lambda c) = lambda oriented_root(c). It is the root s with
// Re(c_j conj(s)) > 0 for the first coordinate j where that is nonzero, so
// for {z1 = const} it is c_1 itself and the fibre chart is w = z1.
cplx oriented_root(std::span<const cplx> c);

struct LoopDiagnostics {
  double min_margin = 0.0;          // min discriminant_margin over samples
  double max_relative_step = 0.0;   // max |q_{i+1} - q_i| / |q_i|
  std::size_t crossing_count = 0;   // cut crossings before free reduction
  double q_winding = 0.0;           // accumulated arg q / 2 pi
  // k-bit recomputed from the accumulated angle of q; agrees with the
  // nearest-root branch on every well-sampled loop.
  int winding_parity = 0;
};

// Validated, normalized loop with its branch and fibre path.
struct LoopTrace {
  std::vector<Hyperplane> samples;  // normalized
  cplx closure_phase;               // lambda / |lambda|
  std::vector<cplx> q;
  std::vector<cplx> branch;         // s_i
  std::vector<cplx> fiber;          // w_i = d_i / s_i
  bool kappa = false;
  LoopDiagnostics diagnostics;
};

// Checks closure, general position of every sample and branch continuation.
// Requires n >= 2; classify additionally requires n >= 3.
LoopTrace trace_loop(const HyperplaneLoop& loop, double tol = kDefaultTol);

int kappa_bit(const HyperplaneLoop& loop, double tol = kDefaultTol);
FreeWord fiber_word(const HyperplaneLoop& loop, double tol = kDefaultTol);
// Crossing word of a fibre path with the basepoint transport legs added.
FreeWord fiber_word(const LoopTrace& trace, double tol = kDefaultTol,
                    std::size_t* crossings = nullptr);

struct ClassificationResult {
  GroupWord word;
  MonodromyMatrix matrix_even;
  MonodromyMatrix matrix_odd;
  LoopDiagnostics diagnostics;
};

ClassificationResult classify(const HyperplaneLoop& loop,
                              double tol = kDefaultTol);

}  // namespace qmono
