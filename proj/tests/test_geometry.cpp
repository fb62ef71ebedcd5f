#include <doctest.h>

#include <random>

#include "qmono/errors.hpp"
#include "qmono/geometry.hpp"
#include "support.hpp"

using namespace qmono;

namespace {

const cplx I{0.0, 1.0};

Hyperplane hp(std::vector<cplx> c, cplx d) { return Hyperplane(std::move(c), d); }

// Random point on sum z_i^2 = 1: rescale a random vector by a square root
// of its bilinear square.
std::vector<cplx> random_quadric_point(std::mt19937_64& rng, std::size_t n) {
  auto v = testing::random_cvector(rng, n);
  cplx s = 0.0;
  for (auto& z : v) s += z * z;
  const cplx r = std::sqrt(s);
  for (auto& z : v) z /= r;
  return v;
}

}  // namespace

TEST_CASE("quad_form") {
  CHECK(quad_form(std::vector<cplx>{1.0, 0.0, 0.0}) == cplx(1.0));
  CHECK(std::abs(quad_form(std::vector<cplx>{1.0, I, 0.0})) == 0.0);
  CHECK(quad_form(std::vector<cplx>{3.0, 4.0}) == cplx(25.0));
  try {
    quad_form(std::vector<cplx>{0.0, 0.0});
    FAIL("zero vector accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroCoefficientVector);
  }
  CHECK_THROWS_AS(hp({0.0, 0.0}, 1.0), Error);
}

TEST_CASE("tangency examples") {
  CHECK(is_tangent(hp({1.0, 0.0}, 1.0)));
  CHECK_FALSE(is_tangent(hp({1.0, 0.0}, 0.0)));
  CHECK(is_tangent(hp({0.0, 1.0, 0.0}, -1.0)));
}

TEST_CASE("asymptotic examples") {
  CHECK(is_asymptotic(hp({1.0, I}, 0.3)));
  CHECK(is_asymptotic(hp({1.0, I}, cplx(-2.0, 5.0))));
  CHECK_FALSE(is_asymptotic(hp({1.0, 0.0, 0.0}, 0.0)));
  // q = 2 i eps + eps^2; on the unit-norm representative |q| ~ eps.
  const double eps = 1e-3;
  const Hyperplane near = hp({1.0, I + eps}, 0.0);
  CHECK_FALSE(is_asymptotic(near, 1e-9));
  CHECK_FALSE(is_asymptotic(near, 1e-4));
  CHECK(is_asymptotic(near, 1e-2));
}

TEST_CASE("general position and margin") {
  CHECK(in_general_position(hp({1.0, 0.0, 0.0}, 0.0)));
  CHECK_FALSE(in_general_position(hp({1.0, 0.0}, 1.0)));
  CHECK_FALSE(in_general_position(hp({1.0, I, 0.0}, 5.0)));

  CHECK(discriminant_margin(hp({1.0, 0.0}, 0.0)) == doctest::Approx(1.0));
  CHECK(discriminant_margin(hp({1.0, 0.0}, 1.0)) == 0.0);
  CHECK(discriminant_margin(hp({1.0, I}, 1.0)) == 0.0);
}

TEST_CASE("predicates are scale invariant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Hyperplane h(testing::random_cvector(rng, 4), testing::random_complex(rng));
    const cplx lambda = testing::random_complex(rng);
    const Hyperplane g = h.scaled(lambda);
    CHECK(is_tangent(h) == is_tangent(g));
    CHECK(is_asymptotic(h) == is_asymptotic(g));
    CHECK(in_general_position(h) == in_general_position(g));
    CHECK(discriminant_margin(h) ==
          doctest::Approx(discriminant_margin(g)).epsilon(1e-12));
  }
  // Tangent and asymptotic hyperplanes stay so under rescaling.
  for (cplx lambda : {cplx(2.0), cplx(0.0, -3.0), cplx(1e-3, 1e-3)}) {
    CHECK(is_tangent(hp({1.0, 0.0}, 1.0).scaled(lambda)));
    CHECK(is_asymptotic(hp({1.0, I}, 1.0).scaled(lambda)));
  }
}

TEST_CASE("tangent planes at quadric points satisfy d^2 = q") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_quadric_point(rng, 3 + static_cast<std::size_t>(i % 4));
    const Hyperplane h(p, 1.0);
    CHECK(is_tangent(h));
    // Independent check: the critical value of the quadric restricted to
    // the plane vanishes.
    CHECK(std::abs(testing::restricted_critical_value(p, 1.0)) < 1e-9);
  }
}

TEST_CASE("restricted critical value equals (d^2 - q) / q") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing::random_cvector(rng, 4);
    const cplx d = testing::random_complex(rng);
    const cplx q = quad_form(c);
    const cplx oracle = testing::restricted_critical_value(c, d);
    CHECK(std::abs(oracle - (d * d - q) / q) < 1e-8 * std::max(1.0, std::abs(oracle)));
    CHECK_FALSE(is_tangent(Hyperplane(c, d)));
  }
}

TEST_CASE("exactly two parallel tangent offsets") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing::random_cvector(rng, 5);
    const auto [s1, s2] = tangent_offsets(c);
    CHECK(std::abs(s1 - s2) > 1e-6);
    CHECK(std::abs(s1 + s2) < 1e-12);
    CHECK(is_tangent(Hyperplane(c, s1)));
    CHECK(is_tangent(Hyperplane(c, s2)));
    CHECK(std::abs(testing::restricted_critical_value(c, s1)) < 1e-9);
    CHECK(std::abs(testing::restricted_critical_value(c, s2)) < 1e-9);
  }
  CHECK_THROWS_AS(tangent_offsets(std::vector<cplx>{1.0, I}), Error);
}

TEST_CASE("tangent offsets collide as the direction becomes asymptotic") {
  double prev = 1e300;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
    const auto [s1, s2] = tangent_offsets(std::vector<cplx>{1.0, I + eps});
    const double gap = std::abs(s1 - s2);
    CHECK(gap < prev);
    CHECK(gap == doctest::Approx(2.0 * std::sqrt(std::abs(2.0 * I * eps + eps * eps))));
    prev = gap;
  }
}
