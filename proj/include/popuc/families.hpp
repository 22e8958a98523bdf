#pragma once

#include <string>
#include <vector>

#include "popuc/monotone.hpp"

namespace popuc::families {

using monotone::ParameterFamily;

// Jacobi parameters lambda_1..lambda_{n+1} with lambda_1 = 1 and
// j (2a + j - 1) lambda_j lambda_{j+1} = 1; lambdas[j] holds lambda_{j+1}.
std::vector<double> jacobi_lambdas(double a, int n);

// beta_j(b) = (j + a - ib) lambda_{j+1}, zeta = 1.
tridiag::BetaSequence hypergeometric_beta(double a, int n, double b);

// Family in the real parameter b; H is independent of b and every
// d/db Im(beta_j) = -lambda_{j+1} < 0.
ParameterFamily hypergeometric_family(double a, int n);

// r_m(z) by the three-term recurrence
//   r_{j+1} = ((a+j-ib) + (a+j+ib) z) r_j - j (2a+j-1) z r_{j-1}.
Complex hypergeometric_polynomial(double a, double b, int m, Complex z);

// Zeros of r_m via the root finder.
std::vector<Complex> hypergeometric_zeros(double a, double b, int m);

struct ChainSequenceResult {
  bool ok = false;
  std::vector<double> g;  // parameter sequence, g[0] = 0
  int fail_index = -1;
};

// Constructive verification that s_j = j(2a+j-1)/((a+j)(a+j+1)) is a chain
// sequence up to index n (forward recursion with g_0 = 0).
ChainSequenceResult chain_sequence_check(double a, int n);

Matrix table1_H(int n, double t);  // tridiagonal, diagonal t, off-diagonal 1
Matrix table1_K(int n, double t);  // tridiagonal, diagonal pi + cos(t)/k, off-diagonal 1

// Matrix family t -> A(t) = H(t) + iK(t) of order n.
ParameterFamily table1_family(int n);

// Tabulated family file:
//   kind schur|matrix
//   order M
//   t,entry,entry,...        (complex entries `re+imi`; matrices row-major)
// with a strictly increasing t column; evaluable only on the tabulated grid.
ParameterFamily tabulated_family(const std::string& path);

// Emits a matrix family on a grid in the tabulated format above.
void emit_tabulated_matrix(const std::string& path, const ParameterFamily& family,
                           const std::vector<double>& grid);

}  // namespace popuc::families
