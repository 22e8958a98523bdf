#pragma once

#include <cstdint>
#include <vector>

#include "popuc/numerics.hpp"
#include "popuc/types.hpp"

namespace popuc::schur {

// The array (alpha_0, ..., alpha_{n-1}, tau_n) with |alpha_j| < 1 and
// |tau_n| = 1 that parameterizes a unitary upper Hessenberg matrix with
// positive subdiagonal.
struct SchurParameters {
  std::vector<Complex> alphas;
  Complex tau{1.0, 0.0};

  int n() const { return static_cast<int>(alphas.size()); }
  int order() const { return n() + 1; }  // matrix order = polynomial degree
  void validate() const;                 // throws InputError naming the bad index
};

struct UnitaryHessenberg {
  Matrix matrix;
  SchurParameters source;
};

// Eigenvalues on the unit circle with arguments normalized to (0, 2pi],
// ascending, plus unit eigenvectors column-matched to the angles.
struct EigenAngleSet {
  std::vector<double> angles;
  std::vector<Complex> eigenvalues;
  Matrix vectors;

  int size() const { return static_cast<int>(angles.size()); }
};

// Product of the Givens-type factors; cross-checked against the closed-form
// entry display and the unitarity invariant.
UnitaryHessenberg build_hessenberg(const SchurParameters& params);

// Inverse parameterization of a unitary upper Hessenberg matrix with
// strictly positive subdiagonal.
SchurParameters recover_parameters(const Matrix& M);

// Characteristic polynomial det(zI - G) by the leading-principal-minor
// recurrence for Hessenberg matrices.
Complex popuc_eval(const SchurParameters& params, Complex z);

// Hessenberg characteristic polynomial value from an explicit matrix.
Complex hessenberg_charpoly(const Matrix& M, Complex z);

// Monic coefficients of det(zI - M), ascending powers.
std::vector<Complex> hessenberg_charpoly_coeffs(const Matrix& M);

EigenAngleSet popuc_zeros(const SchurParameters& params);

// Max-norm residual of the Schur-complement identity
//   G11 - G12 (G22 - zeta I)^{-1} G21 = G(alpha_0..alpha_{j-1}, tau_j(zeta)).
double schur_complement_check(const SchurParameters& params, Complex zeta, int j);

// Deterministic per seed; alphas uniform in the disk of radius 0.95, tau
// uniform on the circle.
SchurParameters random_parameters(int n, std::uint64_t seed);

}  // namespace popuc::schur
