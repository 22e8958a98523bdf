#pragma once

#include <optional>
#include <vector>

#include "popuc/types.hpp"

namespace popuc::numerics {

// Dense complex kernel for matrices of desk scale (order <= 64).

struct EigenDecomposition {
  Vector values;   // eigenvalues; real ascending for the Hermitian path
  Matrix vectors;  // unit-norm columns, values[k] <-> vectors.col(k)
};

struct CholeskyResult {
  bool ok = false;
  Matrix L;              // lower triangular, L L* = M - shift I when ok
  int failed_pivot = -1; // first nonpositive pivot index when !ok
};

enum class Definiteness { Positive, Negative, Indefinite };

// Cholesky of M - shift*I. Failure (a nonpositive pivot) is a value, not a fault.
CholeskyResult cholesky(const Matrix& M, double shift = 0.0);

// PD / ND / indefinite-or-inconclusive via shifted Cholesky with
// delta = 1e-10 * max|M_ij|.
Definiteness definiteness(const Matrix& M);

// Hermitian eigendecomposition, real eigenvalues ascending, orthonormal vectors.
EigenDecomposition hermitian_eig(const Matrix& M);

// Principal square root of a positive definite Hermitian matrix.
Matrix hermitian_sqrt(const Matrix& M);

// Hermitian M^p for PD M (p = -1/2 is the case needed downstream).
Matrix hermitian_power(const Matrix& M, double exponent);

// All eigenpairs of a general square complex matrix; residual
// ||Mv - lambda v|| <= 1e-9 ||M|| per pair, enforced after refinement.
EigenDecomposition general_eig(const Matrix& M);

// All roots of sum coeffs[k] z^k (ascending order, leading nonzero) by
// Aberth-Ehrlich simultaneous iteration plus one Newton polish per root.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

// Solve M x = b by pivoted elimination; throws NumericsFault when a pivot
// falls below 1e-14 * ||M||.
Vector solve(const Matrix& M, const Vector& b);

double max_norm(const Matrix& M);

}  // namespace popuc::numerics
