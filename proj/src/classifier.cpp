#include "qmono/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmono/errors.hpp"
#include "qmono/kernels.hpp"

namespace qmono {

namespace {

// Distance from point p to the segment [a, b].
double segment_distance(cplx a, cplx b, cplx p) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * ab - p);
}

void check_punctures(cplx a, cplx b, double tol, std::size_t index) {
  if (segment_distance(a, b, 1.0) <= tol || segment_distance(a, b, -1.0) <= tol) {
    throw Error(ErrorKind::PunctureCollision,
                "fibre path passes through a tangent member of the pencil",
                index);
  }
}

bool upper(cplx z) { return z.imag() >= 0.0; }

// Appends the cut crossing of segment a -> b, if any.
void crossing(cplx a, cplx b, std::vector<Letter>& out) {
  const bool from_upper = upper(a);
  if (from_upper == upper(b)) return;
  const double t = -a.imag() / (b.imag() - a.imag());
  const double x = a.real() + t * (b.real() - a.real());
  const bool upward = !from_upper;
  if (x > 1.0) {
    out.push_back({Gen::Alpha, upward ? 1 : -1});
  } else if (x < -1.0) {
    out.push_back({Gen::Beta, upward ? -1 : 1});
  }
}

}  // namespace

cplx oriented_root(std::span<const cplx> c) {
  const cplx q = quad_form(c);
  const cplx r = std::sqrt(q);
  const double scale = coefficient_norm(c) * std::abs(r);
  for (const cplx& x : c) {
    const double t = (x * std::conj(r)).real();
    if (std::abs(t) > 1e-12 * scale) return t > 0.0 ? r : -r;
  }
  return r;
}

std::vector<cplx> continue_sqrt_branch(std::span<const cplx> q, double tol,
                                       std::optional<cplx> start) {
  std::vector<cplx> s;
  s.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!(std::abs(q[i]) > tol)) {
      throw Error(ErrorKind::AsymptoticSample, "q vanishes at a sample", i);
    }
    if (i == 0) {
      const cplx r = std::sqrt(q[0]);
      s.push_back(start && std::abs(r + *start) < std::abs(r - *start) ? -r : r);
      continue;
    }
    if (!(std::abs(q[i] - q[i - 1]) < std::abs(q[i - 1]))) {
      throw Error(ErrorKind::UndersampledLoop,
                  "relative step of q is not below 1", i - 1);
    }
    const cplx r = std::sqrt(q[i]);
    s.push_back(std::abs(r - s.back()) <= std::abs(r + s.back()) ? r : -r);
  }
  return s;
}

LoopTrace trace_loop(const HyperplaneLoop& loop, double tol) {
  if (loop.n < 2) {
    throw Error(ErrorKind::DimensionTooSmall, "loops need n >= 2");
  }
  const cplx lambda = resolve_closure(loop, tol);

  LoopTrace t;
  t.closure_phase = lambda / std::abs(lambda);
  t.samples.reserve(loop.samples.size());
  for (const Hyperplane& h : loop.samples) t.samples.push_back(h.normalized());

  kernels::SampleScan scan = kernels::scan_samples(t.samples, tol);
  if (scan.first_bad) {
    const std::size_t i = *scan.first_bad;
    throw Error(ErrorKind::NotGeneralPosition,
                std::string("sample ") + std::to_string(i) + " is " +
                    (scan.first_bad_asymptotic ? "asymptotic" : "tangent"),
                i);
  }
  t.q = std::move(scan.q);
  t.diagnostics.min_margin = scan.min_margin;
  t.branch = continue_sqrt_branch(t.q, tol, oriented_root(t.samples.front().c()));

  double winding = 0.0;
  for (std::size_t i = 0; i + 1 < t.q.size(); ++i) {
    t.diagnostics.max_relative_step =
        std::max(t.diagnostics.max_relative_step,
                 std::abs(t.q[i + 1] - t.q[i]) / std::abs(t.q[i]));
    winding += std::arg(t.q[i + 1] / t.q[i]);
  }
  const double pi = std::numbers::pi;
  t.diagnostics.q_winding = winding / (2.0 * pi);
  // s_m / s_0 has phase e^{i winding / 2}; it equals +-phase(lambda).
  const long turns = std::lround((winding / 2.0 - std::arg(t.closure_phase)) / pi);
  t.diagnostics.winding_parity = static_cast<int>(((turns % 2) + 2) % 2);

  const cplx s0 = t.branch.front();
  const cplx sm = t.branch.back();
  const double same = std::abs(sm - t.closure_phase * s0);
  const double flipped = std::abs(sm + t.closure_phase * s0);
  const double gate = std::sqrt(tol) * std::abs(s0);
  if (same <= gate) {
    t.kappa = false;
  } else if (flipped <= gate) {
    t.kappa = true;
  } else {
    throw Error(ErrorKind::BranchAmbiguity,
                "final branch matches neither closure sign");
  }

  t.fiber.reserve(t.samples.size());
  for (std::size_t i = 0; i < t.samples.size(); ++i) {
    t.fiber.push_back(t.samples[i].d() / t.branch[i]);
  }
  return t;
}

FreeWord fiber_word(const LoopTrace& t, double tol, std::size_t* crossings) {
  const auto& w = t.fiber;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const double room = std::min(std::abs(w[i] - 1.0), std::abs(w[i] + 1.0));
    if (!(std::abs(w[i + 1] - w[i]) < room)) {
      throw Error(ErrorKind::UndersampledLoop,
                  "fibre step is not shorter than the distance to a puncture", i);
    }
    check_punctures(w[i], w[i + 1], tol, i);
  }
  check_punctures(0.0, w.front(), tol, 0);
  check_punctures(w.back(), 0.0, tol, w.size() - 1);

  std::vector<Letter> letters;
  crossing(0.0, w.front(), letters);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) crossing(w[i], w[i + 1], letters);
  crossing(w.back(), 0.0, letters);
  if (crossings) *crossings = letters.size();
  return free_reduce(letters);
}

int kappa_bit(const HyperplaneLoop& loop, double tol) {
  return trace_loop(loop, tol).kappa ? 1 : 0;
}

FreeWord fiber_word(const HyperplaneLoop& loop, double tol) {
  return fiber_word(trace_loop(loop, tol), tol);
}

ClassificationResult classify(const HyperplaneLoop& loop, double tol) {
  if (loop.n < 3) {
    throw Error(ErrorKind::DimensionTooSmall,
                "the classifier requires n >= 3");
  }
  LoopTrace t = trace_loop(loop, tol);
  ClassificationResult r;
  r.diagnostics = t.diagnostics;
  r.word = GroupWord{fiber_word(t, tol, &r.diagnostics.crossing_count), t.kappa};
  r.matrix_even = matrix_of(r.word, Parity::Even);
  r.matrix_odd = matrix_of(r.word, Parity::Odd);
  return r;
}

}  // namespace qmono
