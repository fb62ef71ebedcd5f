#include "qmono/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "qmono/errors.hpp"

namespace qmono {

double coefficient_norm(std::span<const cplx> c) {
  double s = 0.0;
  for (const cplx& x : c) s += std::norm(x);
  return std::sqrt(s);
}

Hyperplane::Hyperplane(std::vector<cplx> c, cplx d) : c_(std::move(c)), d_(d) {
  if (c_.empty() || coefficient_norm(c_) == 0.0) {
    throw Error(ErrorKind::ZeroCoefficientVector,
                "hyperplane coefficient vector is zero");
  }
}

Hyperplane Hyperplane::normalized() const {
  const double r = coefficient_norm(c_);
  std::vector<cplx> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(),
                 [r](const cplx& x) { return x / r; });
  return Hyperplane(std::move(c), d_ / r);
}

Hyperplane Hyperplane::scaled(cplx lambda) const {
  std::vector<cplx> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(),
                 [lambda](const cplx& x) { return lambda * x; });
  return Hyperplane(std::move(c), lambda * d_);
}

Hyperplane Hyperplane::coordinate(std::size_t n, cplx value) {
  std::vector<cplx> c(n, 0.0);
  if (n > 0) c[0] = 1.0;
  return Hyperplane(std::move(c), value);
}

cplx quad_form(std::span<const cplx> c) {
  if (c.empty() || coefficient_norm(c) == 0.0) {
    throw Error(ErrorKind::ZeroCoefficientVector, "coefficient vector is zero");
  }
  cplx q = 0.0;
  for (const cplx& x : c) q += x * x;
  return q;
}

bool is_tangent(const Hyperplane& h, double tol) {
  const Hyperplane n = h.normalized();
  const cplx q = quad_form(n.c());
  const cplx d2 = n.d() * n.d();
  const double scale = std::max({std::abs(d2), std::abs(q), 1.0});
  return std::abs(d2 - q) <= tol * scale;
}

bool is_asymptotic(const Hyperplane& h, double tol) {
  return std::abs(quad_form(h.normalized().c())) <= tol;
}

bool in_general_position(const Hyperplane& h, double tol) {
  return !is_tangent(h, tol) && !is_asymptotic(h, tol);
}

double discriminant_margin(const Hyperplane& h) {
  const Hyperplane n = h.normalized();
  const cplx q = quad_form(n.c());
  return std::min(std::abs(n.d() * n.d() - q), std::abs(q));
}

std::array<cplx, 2> tangent_offsets(std::span<const cplx> c, double tol) {
  const double r = coefficient_norm(c);
  const cplx q = quad_form(c);
  if (std::abs(q) <= tol * r * r) {
    throw Error(ErrorKind::AsymptoticSample,
                "asymptotic direction has no distinct tangent offsets");
  }
  const cplx s = std::sqrt(q);
  return {s, -s};
}

}  // namespace qmono
