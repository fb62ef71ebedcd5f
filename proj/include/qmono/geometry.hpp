#pragma once

// Incidence of affine hyperplanes {z : sum c_i z_i = d} in C^n with the
// standard quadric A = {z_1^2 + ... + z_n^2 = 1}.
//
// With q = sum c_i^2 (no conjugation) the hyperplane is tangent to A iff
// d^2 = q, and asymptotic (its part at infinity is tangent to the quadric
// at infinity) iff q = 0. Both conditions are homogeneous of degree 2 in
// (c, d), so every predicate here is evaluated on the representative with
// |c| = 1 and is invariant under (c, d) -> (lambda c, lambda d).

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace qmono {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

class Hyperplane {
 public:
  // Throws ZeroCoefficientVector if c vanishes.
  Hyperplane(std::vector<cplx> c, cplx d);

  const std::vector<cplx>& c() const { return c_; }
  cplx d() const { return d_; }
  std::size_t dim() const { return c_.size(); }

  // Representative with Hermitian norm |c| = 1 (positive real rescaling).
  Hyperplane normalized() const;
  Hyperplane scaled(cplx lambda) const;

  // Hyperplane {z_1 = value} in C^n.
  static Hyperplane coordinate(std::size_t n, cplx value = 0.0);

 private:
  std::vector<cplx> c_;
  cplx d_;
};

double coefficient_norm(std::span<const cplx> c);

// q = sum c_i^2. Throws ZeroCoefficientVector on c = 0.
cplx quad_form(std::span<const cplx> c);

bool is_tangent(const Hyperplane& h, double tol = kDefaultTol);
bool is_asymptotic(const Hyperplane& h, double tol = kDefaultTol);
bool in_general_position(const Hyperplane& h, double tol = kDefaultTol);

// min(|d^2 - q|, |q|) on the normalized representative; zero exactly on
// the discriminant.
double discriminant_margin(const Hyperplane& h);

// The two offsets +-sqrt(q) at which a hyperplane parallel to c is
// tangent to A. Throws AsymptoticSample if q vanishes within tol.
std::array<cplx, 2> tangent_offsets(std::span<const cplx> c,
                                    double tol = kDefaultTol);

}  // namespace qmono
