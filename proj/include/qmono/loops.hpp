#pragma once

// Closed sampled loops of hyperplanes and the fixture loops realizing the
// generators a, b, k, all based at the hyperplane {z1 = 0}.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmono/geometry.hpp"

namespace qmono {

struct HyperplaneLoop {
  int n = 0;
  // samples.back() equals closure_lambda * samples.front() up to tolerance.
  std::vector<Hyperplane> samples;
  // Inferred by least squares when absent.
  std::optional<cplx> closure_lambda;
};

// Least-squares lambda minimizing |v_end - lambda v_start| over the
// concatenated coefficient vectors (c, d).
cplx fit_scale(const Hyperplane& from, const Hyperplane& to);

// Max component deviation between the normalized representatives of `to`
// and lambda/|lambda| times that of `from`.
double scale_residual(const Hyperplane& from, const Hyperplane& to, cplx lambda);

// The closure factor of the loop: the supplied one, or the fitted one.
// Throws NotClosed if the residual exceeds tol, MalformedLoop on fewer than
// two samples or a dimension mismatch.
cplx resolve_closure(const HyperplaneLoop& loop, double tol = kDefaultTol);

// d travels 0 -> 1 - eps, once counterclockwise around 1 on the circle of
// radius eps, and back; c is fixed at e1. The radial legs are graded
// geometrically towards the puncture so every step stays shorter than the
// distance to it. Requires n >= 2, eps in (0, 1), segments >= 64.
HyperplaneLoop make_alpha_loop(int n, double eps, int segments);
// Mirror image around -1.
HyperplaneLoop make_beta_loop(int n, double eps, int segments);
// c = (cos t, sin t, 0, ...), d = 0, t in [0, pi]; closes with lambda = -1.
HyperplaneLoop make_kappa_loop(int n, int segments);
// Stationary at {z1 = 0}.
HyperplaneLoop make_constant_loop(int n, int segments);

// l1 followed by l2. The start of l2 must match the end of l1 up to scale;
// l2 is rescaled to continue from it and the closure factors multiply.
HyperplaneLoop concat(const HyperplaneLoop& l1, const HyperplaneLoop& l2,
                      double tol = kDefaultTol);
HyperplaneLoop reverse(const HyperplaneLoop& l, double tol = kDefaultTol);
// Inserts the (c, d)-midpoint between consecutive samples.
HyperplaneLoop refine(const HyperplaneLoop& l);

// {"n": int, "samples": [{"c": [[re, im], ...], "d": [re, im]}, ...],
//  "closure_lambda": [re, im]}   (closure_lambda optional)
std::string loop_to_json(const HyperplaneLoop& l);
// Throws MalformedLoop on schema violations.
HyperplaneLoop loop_from_json(std::string_view text);

}  // namespace qmono
