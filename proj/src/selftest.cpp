#include "qmono/selftest.hpp"

#include <random>
#include <sstream>

#include "qmono/classifier.hpp"
#include "qmono/errors.hpp"
#include "qmono/orbits.hpp"

namespace qmono {

namespace {

std::vector<Letter> random_letters(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 4);
  std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
  for (Letter& l : out) {
    switch (pick(rng)) {
      case 0: l = {Gen::Alpha, 1}; break;
      case 1: l = {Gen::Alpha, -1}; break;
      case 2: l = {Gen::Beta, 1}; break;
      case 3: l = {Gen::Beta, -1}; break;
      default: l = {Gen::Kappa, 1}; break;
    }
  }
  return out;
}

GroupWord word(std::string_view text) { return parse_word(text); }

SelftestCheck relations() {
  SelftestCheck c{"relations", true, ""};
  std::ostringstream why;
  if (word("k a") != word("b k")) {
    c.ok = false;
    why << "k a != b k as words; ";
  }
  if (!word("k k").is_identity()) {
    c.ok = false;
    why << "k k != e; ";
  }
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto a = generator_matrix(Gen::Alpha, p);
    const auto b = generator_matrix(Gen::Beta, p);
    const auto k = generator_matrix(Gen::Kappa, p);
    if (k * a != b * k) {
      c.ok = false;
      why << "M_k M_a != M_b M_k (" << parity_name(p) << "); ";
    }
    if (k * k != MonodromyMatrix::identity()) {
      c.ok = false;
      why << "M_k^2 != I (" << parity_name(p) << "); ";
    }
  }
  c.detail = c.ok ? "k a = b k, k^2 = e, matrices agree in both parities"
                  : why.str();
  return c;
}

SelftestCheck fixed_vector() {
  SelftestCheck c{"invariant_vector", true, ""};
  std::mt19937_64 rng(20240611);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const GroupWord g = normalize(random_letters(rng, 20));
    for (Parity p : {Parity::Even, Parity::Odd}) {
      ++checked;
      if (apply(g, invariant_line(p), p) != LatticePoint{1, 1}) {
        c.ok = false;
        c.detail = "a + b moved by " + format_word(g);
        return c;
      }
    }
  }
  c.detail = std::to_string(checked) + " (word, parity) pairs fix (1, 1)";
  return c;
}

SelftestCheck orbit_claim() {
  SelftestCheck c{"orbit_claim", false, ""};
  const OrbitReport r = verify_orbit_claim(8, 12, Parity::Even, {1, 0});
  c.ok = r.missing.empty() && r.extraneous.empty();
  c.detail = "radius 8, length 12: " + std::to_string(r.claimed.size()) +
             " claimed, " + std::to_string(r.missing.size()) + " missing, " +
             std::to_string(r.extraneous.size()) + " extraneous";
  return c;
}

SelftestCheck fixtures() {
  SelftestCheck c{"fixture_loops", true, ""};
  std::ostringstream why;
  const int n = 4;
  const double eps = 0.25;
  for (int m : {256, 512}) {
    const auto alpha = make_alpha_loop(n, eps, m);
    const auto kappa = make_kappa_loop(n, m);
    const std::pair<HyperplaneLoop, std::string> cases[] = {
        {alpha, "a"},
        {make_beta_loop(n, eps, m), "b"},
        {kappa, "k"},
        {make_constant_loop(n, m), "e"},
        {concat(kappa, kappa), "e"},
        {reverse(alpha), "a^-1"},
    };
    for (const auto& [loop, expected] : cases) {
      try {
        const std::string got = format_word(classify(loop).word);
        if (got != expected) {
          c.ok = false;
          why << "expected " << expected << " got " << got << " at " << m
              << " samples; ";
        }
      } catch (const Error& e) {
        c.ok = false;
        why << e.what() << "; ";
      }
    }
  }
  c.detail = c.ok ? "a, b, k, e, k k, a^-1 at 256 and 512 samples" : why.str();
  return c;
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  return {relations(), fixed_vector(), orbit_claim(), fixtures()};
}

}  // namespace qmono
