#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qmono/classifier.hpp"
#include "qmono/errors.hpp"
#include "support.hpp"

using namespace qmono;

namespace {

constexpr double kPi = std::numbers::pi;

std::string cls(const HyperplaneLoop& l) { return format_word(classify(l).word); }

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::BadParameters;
}

// Unit-speed phase sweep q_i = exp(2 pi i * turns * t_i).
std::vector<cplx> phase_sweep(double turns, int steps) {
  std::vector<cplx> q;
  for (int i = 0; i <= steps; ++i) {
    q.push_back(std::polar(1.0, 2.0 * kPi * turns * i / steps));
  }
  return q;
}

HyperplaneLoop piece(int which, int n) {
  switch (which) {
    case 0: return make_alpha_loop(n, 0.25, 256);
    case 1: return reverse(make_alpha_loop(n, 0.25, 256));
    case 2: return make_beta_loop(n, 0.3, 256);
    case 3: return reverse(make_beta_loop(n, 0.3, 256));
    default: return make_kappa_loop(n, 256);
  }
}

}  // namespace

TEST_CASE("sqrt branch continuation") {
  const std::vector<cplx> ones(50, 1.0);
  for (const cplx& s : continue_sqrt_branch(ones)) CHECK(s == cplx(1.0));

  // Oracle: the continuous root of exp(i theta) is exp(i theta / 2).
  for (double turns : {1.0, 2.0, 0.5, 3.0}) {
    const int steps = 400;
    const auto q = phase_sweep(turns, steps);
    const auto s = continue_sqrt_branch(q);
    for (int i = 0; i <= steps; ++i) {
      const cplx expected = std::polar(1.0, kPi * turns * i / steps);
      CHECK(std::abs(s[static_cast<std::size_t>(i)] - expected) < 1e-12);
    }
  }
  CHECK(std::abs(continue_sqrt_branch(phase_sweep(1.0, 400)).back() + 1.0) < 1e-12);
  CHECK(std::abs(continue_sqrt_branch(phase_sweep(2.0, 400)).back() - 1.0) < 1e-12);
}

TEST_CASE("sqrt branch errors") {
  CHECK(error_of([] { continue_sqrt_branch(phase_sweep(1.0, 4)); }) ==
        ErrorKind::UndersampledLoop);
  const std::vector<cplx> through_zero{1.0, 0.5, 0.0, 0.5};
  CHECK(error_of([&] { continue_sqrt_branch(through_zero); }) ==
        ErrorKind::AsymptoticSample);
}

TEST_CASE("kappa bit") {
  CHECK(kappa_bit(make_kappa_loop(3, 128)) == 1);
  CHECK(kappa_bit(make_constant_loop(3, 64)) == 0);
  const auto kk = concat(make_kappa_loop(3, 128), make_kappa_loop(3, 128));
  CHECK(kappa_bit(kk) == 0);
  CHECK(*kk.closure_lambda == cplx(1.0));
}

TEST_CASE("kappa bit: a pure rescaling loop is trivial") {
  // c = e^{i pi t} e1 sweeps q once around 0, yet the loop is constant in
  // projective terms.
  HyperplaneLoop l;
  l.n = 3;
  for (int i = 0; i <= 200; ++i) {
    const cplx z = std::polar(1.0, kPi * i / 200);
    l.samples.emplace_back(std::vector<cplx>{z, 0.0, 0.0}, 0.0);
  }
  CHECK(kappa_bit(l) == 0);
  const auto r = classify(l);
  CHECK(r.word.is_identity());
  CHECK(r.diagnostics.q_winding == doctest::Approx(1.0));
  CHECK(r.diagnostics.winding_parity == 0);
}

TEST_CASE("fixture classification") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    CHECK(cls(make_alpha_loop(n, 0.25, 256)) == "a");
    CHECK(cls(make_beta_loop(n, 0.25, 256)) == "b");
    CHECK(cls(make_kappa_loop(n, 256)) == "k");
    CHECK(cls(make_constant_loop(n, 256)) == "e");
    CHECK(cls(reverse(make_alpha_loop(n, 0.25, 256))) == "a^-1");
    CHECK(cls(reverse(make_beta_loop(n, 0.25, 256))) == "b^-1");
    CHECK(cls(reverse(make_kappa_loop(n, 256))) == "k");
  }
  CHECK(fiber_word(make_alpha_loop(3, 0.25, 256)).size() == 1);
  const auto r = classify(make_alpha_loop(4, 0.25, 256));
  CHECK(r.matrix_even == MonodromyMatrix{-1, 2, 0, 1});
  CHECK(r.matrix_odd == MonodromyMatrix::identity());
  CHECK(r.diagnostics.crossing_count == 1);
  CHECK(r.diagnostics.min_margin > 0.0);
}

TEST_CASE("fixtures over a range of radii and sample counts") {
  for (double eps : {0.9, 0.5, 0.1, 1e-3, 1e-6}) {
    for (int m : {64, 100, 256, 1024}) {
      CAPTURE(eps);
      CAPTURE(m);
      CHECK(cls(make_alpha_loop(3, eps, m)) == "a");
      CHECK(cls(make_beta_loop(3, eps, m)) == "b");
    }
  }
}

TEST_CASE("k then a composes to b k") {
  const auto alpha = make_alpha_loop(3, 0.25, 256);
  const auto kappa = make_kappa_loop(3, 256);
  CHECK(cls(concat(kappa, alpha)) == "b k");
  CHECK(cls(concat(alpha, kappa)) == "a k");
  CHECK(classify(concat(alpha, kappa)).word ==
        multiply(classify(alpha).word, classify(kappa).word));
}

TEST_CASE("concatenation is a homomorphism and reversal inverts") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> pick(0, 4), count(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + trial % 3;
    const int len = count(rng);
    HyperplaneLoop loop = piece(pick(rng), n);
    GroupWord expected = classify(loop).word;
    int bits = kappa_bit(loop);
    for (int i = 1; i < len; ++i) {
      const HyperplaneLoop next = piece(pick(rng), n);
      expected = multiply(expected, classify(next).word);
      bits += kappa_bit(next);
      loop = concat(loop, next);
    }
    const auto r = classify(loop);
    CHECK(r.word == expected);
    CHECK(kappa_bit(loop) == bits % 2);
    CHECK(r.diagnostics.winding_parity == kappa_bit(loop));
    CHECK(classify(reverse(loop)).word == invert(r.word));
    CHECK(classify(refine(loop)).word == r.word);
    CHECK(r.matrix_even == matrix_of(r.word, Parity::Even));
    CHECK(r.matrix_even * LatticePoint{1, 1} == LatticePoint{1, 1});
    CHECK(r.matrix_odd * LatticePoint{1, 1} == LatticePoint{1, 1});
  }
}

TEST_CASE("a loop not based at z1 = 0 and moving its direction") {
  // Rotate the direction a quarter turn inside the (z1, z2) plane while the
  // offset circles once around the tangent value; conjugating by the
  // transport legs gives a.
  HyperplaneLoop l;
  l.n = 3;
  const int m = 512;
  for (int i = 0; i <= m; ++i) {
    const double t = double(i) / m;
    const double tau = 0.5 * kPi * std::sin(kPi * t) * std::sin(kPi * t);
    const cplx w = 1.0 + 0.5 * std::polar(1.0, kPi + 2.0 * kPi * t);
    l.samples.emplace_back(std::vector<cplx>{std::cos(tau), std::sin(tau), 0.0},
                           w);
  }
  const auto r = classify(l);
  CHECK(format_word(r.word) == "a");
  CHECK(classify(refine(refine(l))).word == r.word);
}

TEST_CASE("rescaled samples classify identically") {
  std::mt19937_64 rng(32);
  for (int which = 0; which < 5; ++which) {
    const HyperplaneLoop base = piece(which, 3);
    HyperplaneLoop scaled = base;
    // Smoothly varying positive and phase rescaling along the loop.
    const std::size_t m = scaled.samples.size() - 1;
    for (std::size_t i = 0; i <= m; ++i) {
      const double t = double(i) / double(m);
      const cplx f = (1.0 + 0.5 * std::sin(2 * kPi * t)) *
                     std::polar(1.0, 0.3 * std::sin(2 * kPi * t));
      scaled.samples[i] = scaled.samples[i].scaled(f);
    }
    CHECK(classify(scaled).word == classify(base).word);
    // Inferred closure factor instead of the supplied one.
    scaled.closure_lambda.reset();
    CHECK(classify(scaled).word == classify(base).word);
  }
}

TEST_CASE("classifier errors") {
  CHECK(error_of([] { classify(make_alpha_loop(2, 0.25, 256)); }) ==
        ErrorKind::DimensionTooSmall);

  auto open = make_alpha_loop(3, 0.25, 256);
  open.samples.pop_back();
  CHECK(error_of([&] { classify(open); }) == ErrorKind::NotClosed);

  auto wrong_lambda = make_kappa_loop(3, 256);
  wrong_lambda.closure_lambda = 1.0;
  CHECK(error_of([&] { classify(wrong_lambda); }) == ErrorKind::NotClosed);

  auto tangent = make_alpha_loop(3, 0.25, 256);
  tangent.samples[10] = Hyperplane::coordinate(3, 1.0);
  try {
    classify(tangent);
    FAIL("tangent sample accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGeneralPosition);
    REQUIRE(e.sample_index().has_value());
    CHECK(*e.sample_index() == 10);
  }

  // Jump straight across the unit circle around 1.
  HyperplaneLoop coarse;
  coarse.n = 3;
  for (cplx w : {cplx(0.0), cplx(0.5, -0.5), cplx(1.5, 0.5), cplx(0.5, 0.5), cplx(0.0)}) {
    coarse.samples.push_back(Hyperplane::coordinate(3, w));
  }
  CHECK(error_of([&] { classify(coarse); }) == ErrorKind::UndersampledLoop);

  // Starts beyond the puncture: the transport leg from 0 hits w = 1.
  HyperplaneLoop beyond;
  beyond.n = 3;
  for (int i = 0; i <= 64; ++i) {
    beyond.samples.push_back(
        Hyperplane::coordinate(3, 3.0 + 0.5 * std::polar(1.0, 2 * kPi * i / 64)));
  }
  CHECK(error_of([&] { classify(beyond); }) == ErrorKind::PunctureCollision);

  auto mismatched = make_constant_loop(3, 64);
  mismatched.samples[5] = Hyperplane::coordinate(4, 0.0);
  CHECK(error_of([&] { classify(mismatched); }) == ErrorKind::MalformedLoop);
}

TEST_CASE("fixture constructor parameters") {
  CHECK(error_of([] { make_alpha_loop(3, 0.0, 256); }) == ErrorKind::BadParameters);
  CHECK(error_of([] { make_alpha_loop(3, 1.0, 256); }) == ErrorKind::BadParameters);
  CHECK(error_of([] { make_beta_loop(3, 0.5, 63); }) == ErrorKind::BadParameters);
  CHECK(error_of([] { make_kappa_loop(1, 128); }) == ErrorKind::BadParameters);
  CHECK(error_of([] {
          concat(make_alpha_loop(3, 0.5, 64), make_alpha_loop(4, 0.5, 64));
        }) == ErrorKind::BadParameters);
  auto shifted = make_alpha_loop(3, 0.5, 64);
  for (auto& h : shifted.samples) h = Hyperplane(h.c(), h.d() + 0.1);
  CHECK(error_of([&] { concat(make_alpha_loop(3, 0.5, 64), shifted); }) ==
        ErrorKind::BadParameters);
}

TEST_CASE("loop JSON round trip") {
  const auto l = concat(make_kappa_loop(4, 64), make_beta_loop(4, 0.2, 128));
  const auto back = loop_from_json(loop_to_json(l));
  CHECK(back.n == 4);
  REQUIRE(back.samples.size() == l.samples.size());
  for (std::size_t i = 0; i < l.samples.size(); ++i) {
    CHECK(back.samples[i].c() == l.samples[i].c());
    CHECK(back.samples[i].d() == l.samples[i].d());
  }
  CHECK(back.closure_lambda == l.closure_lambda);
  CHECK(classify(back).word == classify(l).word);

  CHECK(error_of([] { loop_from_json("{"); }) == ErrorKind::MalformedLoop);
  CHECK(error_of([] { loop_from_json(R"({"n": 3})"); }) == ErrorKind::MalformedLoop);
  CHECK(error_of([] {
          loop_from_json(R"({"n": 3, "samples": [{"c": [[1, 0]], "d": [0]}]})");
        }) == ErrorKind::MalformedLoop);
  const auto no_lambda = loop_from_json(
      R"({"n": 3, "samples": [{"c": [[1,0],[0,0],[0,0]], "d": [0,0]},
                             {"c": [[1,0],[0,0],[0,0]], "d": [0,0]}]})");
  CHECK_FALSE(no_lambda.closure_lambda.has_value());
}

TEST_CASE("tiny radius needs more samples") {
  CHECK(error_of([] { make_alpha_loop(3, 1e-12, 64); }) == ErrorKind::BadParameters);
  CHECK(cls(make_alpha_loop(3, 1e-7, 64)) == "a");
  CHECK(error_of([] { classify(make_alpha_loop(3, 1e-12, 256)); }) ==
        ErrorKind::NotGeneralPosition);
}

TEST_CASE("oriented root follows the representative") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing::random_cvector(rng, 4);
    const cplx lambda = testing::random_complex(rng);
    std::vector<cplx> scaled(c);
    for (auto& z : scaled) z *= lambda;
    const cplx s = oriented_root(c);
    CHECK(std::abs(s * s - quad_form(c)) < 1e-12 * std::abs(quad_form(c)));
    CHECK(std::abs(oriented_root(scaled) - lambda * s) < 1e-9 * std::abs(lambda * s));
  }
  CHECK(oriented_root(std::vector<cplx>{-1.0, 0.0, 0.0}) == cplx(-1.0));
  CHECK(oriented_root(std::vector<cplx>{0.0, 2.0, 0.0}) == cplx(2.0));
  CHECK(oriented_root(std::vector<cplx>{0.0, -2.0, 0.0}) == cplx(-2.0));
}
