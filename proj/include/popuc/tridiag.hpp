#pragma once

#include <vector>

#include "popuc/schur.hpp"

namespace popuc::tridiag {

using schur::EigenAngleSet;
using schur::SchurParameters;

// Unit-modulus coefficients tau_j(zeta) from the backward Moebius recursion.
struct PseudoReflections {
  Complex zeta;
  std::vector<Complex> values;  // values[j] = tau_j(zeta), j = 0..n
};

enum class BetaProvenance { LiteralFormula, RecurrenceMatched, Direct };

struct BetaSequence {
  Complex zeta;
  Complex zeta_sqrt;            // chosen branch
  std::vector<Complex> values;  // beta_0(zeta) .. beta_n(zeta), all nonzero
  BetaProvenance provenance = BetaProvenance::RecurrenceMatched;

  int order() const { return static_cast<int>(values.size()); }  // n + 1
};

// Lower bidiagonal strictly dissipative matrix with Toeplitz decomposition.
struct DissipativeSystem {
  BetaSequence beta;
  Matrix A;  // diag zeta^{1/2} conj(beta_j), subdiag -zeta^{1/2}
  Matrix H;  // (A + A*) / 2, positive definite
  Matrix K;  // (A - A*) / (2i)
};

// Principal square root branch: arg in (-pi/2, pi/2] for arg zeta in (-pi, pi].
Complex principal_sqrt(Complex zeta);

PseudoReflections pseudo_reflections(const SchurParameters& params, Complex zeta);

// The beta recursion exactly as displayed, with alpha_k := 0 for k >= n.
// Kept for cross-comparison; the displayed formula is suspect and the
// recurrence-matched route below is authoritative.
BetaSequence beta_literal(const SchurParameters& params, const PseudoReflections& refl);

// Reconstructs beta_j so that the symmetric recurrence
//   p_{j+1} = (beta_j + conj(beta_j) z) p_j - z p_{j-1}
// reproduces the nested characteristic polynomials P_{j+1}(z, zeta) up to a
// diagonal rescaling with kappa_0 = 1.
BetaSequence beta_from_charpoly(const SchurParameters& params, Complex zeta);

// Builds A, H, K and verifies H > O.
DissipativeSystem assemble_system(const BetaSequence& beta);

// p_0(z, zeta) .. p_{n+1}(z, zeta) with p_0 = 1.
std::vector<Complex> p_polynomials(const BetaSequence& beta, Complex z);

// Monic-normalized coefficient vector of p_{n+1}(., zeta), ascending powers.
std::vector<Complex> p_top_coeffs(const BetaSequence& beta);

// || (zeta A* + z A) p - zeta^{1/2} p_{n+1}(z) e_{n+1} ||_2 / max(1, ||p||_2)
double matrix_form_residual(const DissipativeSystem& system, Complex z);

// U = A^{-1} A*.
Matrix cayley_transform(const Matrix& A);

// | cot(arg(conj(zeta) eta) / 2) - (p, K p) / (p, H p) | at a zero eta
// of p_{n+1}(., zeta).
double cot_identity_residual(const DissipativeSystem& system, Complex eta);

// || W* W - I ||_max for W = H^{1/2} B^{-1} B* H^{-1/2}, B = iA.
double cayley_unitarity_residual(const DissipativeSystem& system);

// Midpoint of the largest circular spectral gap; ties broken by smallest
// normalized argument.
Complex default_zeta(const SchurParameters& params);
Complex default_zeta(const std::vector<double>& spectrum_angles);

}  // namespace popuc::tridiag
