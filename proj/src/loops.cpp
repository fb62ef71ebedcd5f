#include "qmono/loops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

using json = nlohmann::json;

void check_fixture(int n, int segments) {
  if (n < 2) throw Error(ErrorKind::BadParameters, "n must be at least 2");
  if (segments < 64) {
    throw Error(ErrorKind::BadParameters, "at least 64 samples are required");
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorKind::BadParameters, "eps must lie in (0, 1)");
  }
}

// Largest ratio between consecutive distances to the puncture on the radial
// legs. Walking away from the puncture, a step from distance r to distance
// g r has length (g - 1) r, which must stay below r.
constexpr double kLegGrowth = 1.8;

// Fiber path around the puncture `side` (+1 or -1).
std::vector<cplx> lasso(double side, double eps, int segments) {
  const int needed = static_cast<int>(std::ceil(-std::log(eps) / std::log(kLegGrowth)));
  const int in = std::max(segments / 4, needed);
  const int out = in;
  const int around = segments - in - out;
  if (around < 8) {
    throw Error(ErrorKind::BadParameters,
                "too few samples to resolve a circle of this radius");
  }
  const double pi = std::numbers::pi;

  std::vector<cplx> w;
  w.reserve(static_cast<std::size_t>(segments) + 1);
  for (int j = 0; j <= in; ++j) {
    w.emplace_back(side * (1.0 - std::pow(eps, double(j) / in)), 0.0);
  }
  // Around +1 the circle starts at angle pi, around -1 at angle 0; both
  // run counterclockwise.
  const double start = side > 0 ? pi : 0.0;
  for (int k = 1; k < around; ++k) {
    w.push_back(side + eps * std::polar(1.0, start + 2.0 * pi * k / around));
  }
  w.emplace_back(side * (1.0 - eps), 0.0);
  for (int j = 1; j < out; ++j) {
    w.emplace_back(side * (1.0 - std::pow(eps, double(out - j) / out)), 0.0);
  }
  w.emplace_back(0.0, 0.0);
  return w;
}

HyperplaneLoop fiber_loop(int n, const std::vector<cplx>& offsets) {
  HyperplaneLoop l;
  l.n = n;
  l.closure_lambda = 1.0;
  l.samples.reserve(offsets.size());
  for (const cplx& d : offsets) {
    l.samples.push_back(Hyperplane::coordinate(static_cast<std::size_t>(n), d));
  }
  return l;
}

void check_shape(const HyperplaneLoop& l) {
  if (l.samples.size() < 2) {
    throw Error(ErrorKind::MalformedLoop, "a loop needs at least two samples");
  }
  for (std::size_t i = 0; i < l.samples.size(); ++i) {
    if (l.samples[i].dim() != static_cast<std::size_t>(l.n)) {
      throw Error(ErrorKind::MalformedLoop,
                  "sample dimension differs from n", i);
    }
  }
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error(ErrorKind::MalformedLoop, "complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

cplx fit_scale(const Hyperplane& from, const Hyperplane& to) {
  if (from.dim() != to.dim()) {
    throw Error(ErrorKind::MalformedLoop, "dimension mismatch");
  }
  cplx num = std::conj(from.d()) * to.d();
  double den = std::norm(from.d());
  for (std::size_t i = 0; i < from.dim(); ++i) {
    num += std::conj(from.c()[i]) * to.c()[i];
    den += std::norm(from.c()[i]);
  }
  return num / den;
}

double scale_residual(const Hyperplane& from, const Hyperplane& to,
                      cplx lambda) {
  if (from.dim() != to.dim()) {
    throw Error(ErrorKind::MalformedLoop, "dimension mismatch");
  }
  if (lambda == 0.0) return std::numeric_limits<double>::infinity();
  const cplx phase = lambda / std::abs(lambda);
  const Hyperplane a = from.normalized().scaled(phase);
  const Hyperplane b = to.normalized();
  double worst = std::abs(a.d() - b.d());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst, std::abs(a.c()[i] - b.c()[i]));
  }
  return worst;
}

cplx resolve_closure(const HyperplaneLoop& loop, double tol) {
  check_shape(loop);
  const Hyperplane& first = loop.samples.front();
  const Hyperplane& last = loop.samples.back();
  const cplx lambda = loop.closure_lambda.value_or(fit_scale(first, last));
  if (lambda == 0.0 || !std::isfinite(lambda.real()) ||
      !std::isfinite(lambda.imag())) {
    throw Error(ErrorKind::NotClosed, "closure factor must be nonzero");
  }
  const double r = scale_residual(first, last, lambda);
  if (!(r <= tol)) {
    throw Error(ErrorKind::NotClosed,
                "last sample is not the closure factor times the first (residual " +
                    std::to_string(r) + ")");
  }
  return lambda;
}

HyperplaneLoop make_alpha_loop(int n, double eps, int segments) {
  check_fixture(n, segments);
  check_eps(eps);
  return fiber_loop(n, lasso(1.0, eps, segments));
}

HyperplaneLoop make_beta_loop(int n, double eps, int segments) {
  check_fixture(n, segments);
  check_eps(eps);
  return fiber_loop(n, lasso(-1.0, eps, segments));
}

HyperplaneLoop make_kappa_loop(int n, int segments) {
  check_fixture(n, segments);
  HyperplaneLoop l;
  l.n = n;
  l.closure_lambda = -1.0;
  for (int k = 0; k <= segments; ++k) {
    const double t = std::numbers::pi * k / segments;
    std::vector<cplx> c(static_cast<std::size_t>(n), 0.0);
    c[0] = std::cos(t);
    c[1] = std::sin(t);
    l.samples.emplace_back(std::move(c), 0.0);
  }
  return l;
}

HyperplaneLoop make_constant_loop(int n, int segments) {
  check_fixture(n, segments);
  return fiber_loop(n, std::vector<cplx>(static_cast<std::size_t>(segments) + 1, 0.0));
}

HyperplaneLoop concat(const HyperplaneLoop& l1, const HyperplaneLoop& l2,
                      double tol) {
  if (l1.n != l2.n) {
    throw Error(ErrorKind::BadParameters, "cannot concatenate loops of different n");
  }
  const cplx lambda1 = resolve_closure(l1, tol);
  const cplx lambda2 = resolve_closure(l2, tol);
  const Hyperplane& end = l1.samples.back();
  const cplx nu = fit_scale(l2.samples.front(), end);
  if (!(scale_residual(l2.samples.front(), end, nu) <= tol)) {
    throw Error(ErrorKind::BadParameters,
                "second loop does not start where the first one ends");
  }
  HyperplaneLoop out;
  out.n = l1.n;
  out.samples = l1.samples;
  out.samples.reserve(l1.samples.size() + l2.samples.size() - 1);
  for (std::size_t i = 1; i < l2.samples.size(); ++i) {
    out.samples.push_back(l2.samples[i].scaled(nu));
  }
  // end(l2) scaled by nu = nu * lambda2 * start(l2) = lambda2 * end(l1)
  //                     = lambda2 * lambda1 * start(l1)
  out.closure_lambda = lambda1 * lambda2;
  return out;
}

HyperplaneLoop reverse(const HyperplaneLoop& l, double tol) {
  const cplx lambda = resolve_closure(l, tol);
  HyperplaneLoop out;
  out.n = l.n;
  out.samples.assign(l.samples.rbegin(), l.samples.rend());
  out.closure_lambda = 1.0 / lambda;
  return out;
}

HyperplaneLoop refine(const HyperplaneLoop& l) {
  check_shape(l);
  HyperplaneLoop out;
  out.n = l.n;
  out.closure_lambda = l.closure_lambda;
  out.samples.reserve(2 * l.samples.size() - 1);
  for (std::size_t i = 0; i + 1 < l.samples.size(); ++i) {
    const Hyperplane& a = l.samples[i];
    const Hyperplane& b = l.samples[i + 1];
    std::vector<cplx> c(a.dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = 0.5 * (a.c()[k] + b.c()[k]);
    out.samples.push_back(a);
    out.samples.emplace_back(std::move(c), 0.5 * (a.d() + b.d()));
  }
  out.samples.push_back(l.samples.back());
  return out;
}

std::string loop_to_json(const HyperplaneLoop& l) {
  json samples = json::array();
  for (const Hyperplane& h : l.samples) {
    json c = json::array();
    for (const cplx& z : h.c()) c.push_back(complex_json(z));
    samples.push_back({{"c", std::move(c)}, {"d", complex_json(h.d())}});
  }
  json j = {{"n", l.n}, {"samples", std::move(samples)}};
  if (l.closure_lambda) j["closure_lambda"] = complex_json(*l.closure_lambda);
  return j.dump();
}

HyperplaneLoop loop_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedLoop, e.what());
  }
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array()) {
    throw Error(ErrorKind::MalformedLoop, "expected an object with \"samples\"");
  }
  HyperplaneLoop l;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) {
      throw Error(ErrorKind::MalformedLoop, "\"n\" must be an integer");
    }
    l.n = j["n"].get<int>();
  }
  for (const json& s : j["samples"]) {
    if (!s.is_object() || !s.contains("c") || !s.contains("d") ||
        !s["c"].is_array()) {
      throw Error(ErrorKind::MalformedLoop, "sample needs \"c\" and \"d\"");
    }
    std::vector<cplx> c;
    for (const json& z : s["c"]) c.push_back(complex_from(z));
    l.samples.emplace_back(std::move(c), complex_from(s["d"]));
  }
  if (!j.contains("n") && !l.samples.empty()) {
    l.n = static_cast<int>(l.samples.front().dim());
  }
  if (j.contains("closure_lambda") && !j["closure_lambda"].is_null()) {
    l.closure_lambda = complex_from(j["closure_lambda"]);
  }
  return l;
}

}  // namespace qmono
