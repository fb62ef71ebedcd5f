#pragma once

// Generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qmono/group.hpp"

namespace qmono::testing {

inline std::vector<Letter> random_letters(std::mt19937_64& rng, int max_len,
                                          bool with_kappa = true) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, with_kappa ? 4 : 3);
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

// Faithful model of F2 x| Z/2 in 4x4 integer matrices: the Sanov matrices
// [[1,2],[0,1]] and [[1,0],[2,1]] generate a free group, a acts as
// diag(A, B), b as diag(B, A) and k swaps the two blocks.
using Int4 = Eigen::Matrix<std::int64_t, 4, 4>;

inline Int4 oracle_letter(Letter l) {
  Int4 m = Int4::Zero();
  const std::int64_t s = 2 * l.exp;
  switch (l.gen) {
    case Gen::Alpha:
      m << 1, s, 0, 0,  0, 1, 0, 0,  0, 0, 1, 0,  0, 0, s, 1;
      break;
    case Gen::Beta:
      m << 1, 0, 0, 0,  s, 1, 0, 0,  0, 0, 1, s,  0, 0, 0, 1;
      break;
    case Gen::Kappa:
      m << 0, 0, 1, 0,  0, 0, 0, 1,  1, 0, 0, 0,  0, 1, 0, 0;
      break;
  }
  return m;
}

// Entries grow at most like 3^len; fine in 64 bits for len <= 30.
inline Int4 oracle_matrix(const std::vector<Letter>& letters) {
  Int4 m = Int4::Identity();
  for (const Letter& l : letters) m = m * oracle_letter(l);
  return m;
}

using cvec = Eigen::VectorXcd;

inline std::complex<double> random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

inline std::vector<std::complex<double>> random_cvector(std::mt19937_64& rng,
                                                        std::size_t n) {
  std::vector<std::complex<double>> v(n);
  for (auto& z : v) z = random_complex(rng);
  return v;
}

// Value of f(z) = sum z_i^2 - 1 at the critical point of f restricted to
// the hyperplane {<c, z> = d}, found by parametrizing the hyperplane with
// a null-space basis and solving the linear critical-point equations.
// It vanishes exactly when the hyperplane is tangent to the quadric.
inline std::complex<double> restricted_critical_value(
    const std::vector<std::complex<double>>& c, std::complex<double> d) {
  const Eigen::Index n = static_cast<Eigen::Index>(c.size());
  Eigen::RowVectorXcd row(n);
  for (Eigen::Index i = 0; i < n; ++i) row(i) = c[static_cast<std::size_t>(i)];
  // Particular point z_p = d * conj(c) / |c|^2 satisfies <c, z_p> = d.
  const cvec zp = d * row.adjoint() / row.squaredNorm();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(row);
  const Eigen::MatrixXcd basis = lu.kernel();  // n x (n-1)
  // g(t) = t^T G t + 2 h^T t + k with bilinear (not Hermitian) products.
  const Eigen::MatrixXcd G = basis.transpose() * basis;
  const cvec h = basis.transpose() * zp;
  const std::complex<double> k = (zp.transpose() * zp)(0) - 1.0;
  const cvec t = G.fullPivLu().solve(-h);
  return (t.transpose() * G * t)(0) + 2.0 * (h.transpose() * t)(0) + k;
}

}  // namespace qmono::testing
