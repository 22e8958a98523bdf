#include <doctest.h>

#include "popuc/tridiag.hpp"

using namespace popuc;
using namespace popuc::tridiag;

namespace {

schur::SchurParameters zero_params(int n, Complex tau = Complex(1.0, 0.0)) {
  schur::SchurParameters p;
  p.alphas.assign(n, Complex(0.0));
  p.tau = tau;
  return p;
}

}  // namespace

TEST_CASE("principal_sqrt branch") {
  CHECK(std::abs(principal_sqrt(Complex(1.0)) - 1.0) < 1e-15);
  CHECK(std::abs(principal_sqrt(Complex(-1.0)) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(principal_sqrt(Complex(0.0, 1.0)) - std::polar(1.0, kPi / 4.0)) < 1e-15);
}

TEST_CASE("pseudo_reflections alpha == 0 degenerates to rotation") {
  Complex zeta = std::polar(1.0, 0.9);
  auto p = zero_params(4, std::polar(1.0, 0.3));
  auto refl = pseudo_reflections(p, zeta);
  for (int j = 0; j <= 4; ++j)
    CHECK(std::abs(refl.values[j] - std::pow(zeta, 4 - j) * p.tau) < 1e-12);
}

TEST_CASE("pseudo_reflections 2x2 by hand") {
  schur::SchurParameters p;
  p.alphas = {Complex(0.5)};
  p.tau = 1.0;
  auto refl = pseudo_reflections(p, Complex(0.0, 1.0));
  // (conj(i)*1/2 + 1)/(1/2 + conj(i)) = (1 - i/2)/(1/2 - i) = 0.8 + 0.6i
  CHECK(std::abs(refl.values[0] - Complex(0.8, 0.6)) < 1e-12);
}

TEST_CASE("pseudo_reflections unit modulus invariant") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto p = schur::random_parameters(2 + static_cast<int>(s % 8), 4000 + s);
    Complex zeta = default_zeta(p);
    auto refl = pseudo_reflections(p, zeta);
    for (auto t : refl.values) CHECK(std::abs(std::abs(t) - 1.0) < 1e-12);
  }
}

TEST_CASE("pseudo_reflections rejects zeta in the spectrum") {
  auto p = zero_params(3);  // zeros: 4th roots of unity
  CHECK_THROWS_AS((void)pseudo_reflections(p, Complex(1.0)), InputError);
}

TEST_CASE("beta_literal runs but the displayed formula is not authoritative") {
  // Kept as a logged cross-comparison: even at alpha == 0 the displayed
  // recursion does not deliver coefficients matching the nested charpolys.
  auto p = zero_params(3);  // spectrum: 4th roots of unity, so pick zeta between them
  Complex zeta = std::polar(1.0, kPi / 4.0);
  auto lit = beta_literal(p, pseudo_reflections(p, zeta));
  for (auto v : lit.values) CHECK(std::abs(v) > 1e-14);

  auto matched = beta_from_charpoly(p, zeta);
  double disc = 0.0;
  for (int j = 0; j < matched.order(); ++j)
    disc = std::max(disc, std::abs(lit.values[j] - matched.values[j]));
  MESSAGE("literal-vs-matched max discrepancy: ", disc);
}

TEST_CASE("beta_from_charpoly reproduces the POPUC at alpha == 0") {
  auto beta = beta_from_charpoly(zero_params(3), std::polar(1.0, kPi / 4.0));
  auto coeffs = p_top_coeffs(beta);
  // p_4 proportional to z^4 - 1
  auto roots = numerics::poly_roots(coeffs);
  REQUIRE(roots.size() == 4);
  for (auto r : roots) CHECK(std::abs(std::pow(r, 4) - 1.0) < 1e-9);
}

TEST_CASE("beta_from_charpoly zero coincidence on random instances") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto p = schur::random_parameters(5, 6000 + s);
    auto zeros = schur::popuc_zeros(p);
    auto beta = beta_from_charpoly(p, default_zeta(p));
    auto roots = numerics::poly_roots(p_top_coeffs(beta));
    for (auto r : roots) {
      double best = 4.0;
      for (auto z : zeros.eigenvalues) best = std::min(best, std::abs(r - z));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("beta_from_charpoly output invariants") {
  auto p = schur::random_parameters(7, 12345);
  auto beta = beta_from_charpoly(p, default_zeta(p));
  CHECK(beta.order() == 8);
  for (auto v : beta.values) CHECK(std::abs(v) > 1e-14);
  CHECK(beta.provenance == BetaProvenance::RecurrenceMatched);
  // branch selection: Re(zeta^{1/2} conj(beta_0)) > 0 (forces H > O)
  CHECK((beta.zeta_sqrt * std::conj(beta.values[0])).real() > 0.0);
}

TEST_CASE("assemble_system order 1") {
  BetaSequence beta;
  beta.zeta = 1.0;
  beta.zeta_sqrt = 1.0;
  beta.provenance = BetaProvenance::Direct;
  beta.values = {Complex(1.0)};
  auto sys = assemble_system(beta);
  CHECK(std::abs(sys.A(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(sys.H(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(sys.K(0, 0)) < 1e-15);
}

TEST_CASE("assemble_system order 2 by hand") {
  BetaSequence beta;
  beta.zeta = 1.0;
  beta.zeta_sqrt = 1.0;
  beta.provenance = BetaProvenance::Direct;
  beta.values = {Complex(1.0, 1.0), Complex(1.0, -1.0)};
  auto sys = assemble_system(beta);
  CHECK(std::abs(sys.A(0, 0) - Complex(1.0, -1.0)) < 1e-15);
  CHECK(std::abs(sys.A(1, 1) - Complex(1.0, 1.0)) < 1e-15);
  CHECK(std::abs(sys.A(1, 0) + 1.0) < 1e-15);
  CHECK(std::abs(sys.A(0, 1)) < 1e-15);
  CHECK(std::abs(sys.H(0, 1) + 0.5) < 1e-15);
  // K = (A - A*)/(2i): off-diagonal (-i/2, i/2), diagonal (-1, 1)
  CHECK(std::abs(sys.K(0, 0) + 1.0) < 1e-15);
  CHECK(std::abs(sys.K(0, 1) - Complex(0.0, -0.5)) < 1e-15);
  CHECK(std::abs(sys.K(1, 0) - Complex(0.0, 0.5)) < 1e-15);
  CHECK(std::abs(sys.K(1, 1) - 1.0) < 1e-15);
  CHECK(numerics::max_norm(sys.A - (sys.H + Complex(0.0, 1.0) * sys.K)) < 1e-15);
}

TEST_CASE("assemble_system H > O for the alpha == 0 families") {
  for (int n : {1, 3, 6, 9}) {
    auto beta = beta_from_charpoly(zero_params(n), default_zeta(zero_params(n)));
    CHECK_NOTHROW((void)assemble_system(beta));
  }
}

TEST_CASE("p_polynomials recurrence identities") {
  auto p = schur::random_parameters(4, 31);
  auto beta = beta_from_charpoly(p, default_zeta(p));
  auto vals = p_polynomials(beta, Complex(0.0));
  Complex prod = 1.0;
  for (int j = 0; j < beta.order(); ++j) {
    prod *= beta.values[j];
    CHECK(std::abs(vals[j + 1] - prod) < 1e-10 * (1.0 + std::abs(prod)));
  }

  BetaSequence b1;
  b1.zeta = 1.0;
  b1.zeta_sqrt = 1.0;
  b1.values = {Complex(0.7, 0.2)};
  Complex z(0.3, -0.4);
  auto v1 = p_polynomials(b1, z);
  CHECK(std::abs(v1[1] - (b1.values[0] + std::conj(b1.values[0]) * z)) < 1e-15);
}

TEST_CASE("matrix_form_residual contracts") {
  BetaSequence b1;
  b1.zeta = 1.0;
  b1.zeta_sqrt = 1.0;
  b1.values = {Complex(1.0, 0.5)};
  auto s1 = assemble_system(b1);
  CHECK(matrix_form_residual(s1, Complex(0.2, 0.6)) <= 1e-14);

  auto p = schur::random_parameters(6, 808);
  auto sys = assemble_system(beta_from_charpoly(p, default_zeta(p)));
  CHECK(matrix_form_residual(sys, std::polar(1.0, 2.2)) <= 1e-10);
  auto zeros = schur::popuc_zeros(p);
  for (int k = 0; k < zeros.size(); ++k)
    CHECK(matrix_form_residual(sys, zeros.eigenvalues[k]) <= 1e-10);
}

TEST_CASE("cayley_transform basics") {
  CHECK(numerics::max_norm(cayley_transform(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)) <
        1e-14);
  Matrix A = Complex(1.0, 1.0) * Matrix::Identity(2, 2);
  Matrix U = cayley_transform(A);
  CHECK(numerics::max_norm(U - Complex(0.0, -1.0) * Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("scalar system matches the cot identity by hand") {
  // A = [1+i]: -A^{-1}A* = i, arg = pi/2, cot(pi/4) = 1 = (p,Kp)/(p,Hp)
  BetaSequence beta;
  beta.zeta = 1.0;
  beta.zeta_sqrt = 1.0;
  beta.values = {Complex(1.0, -1.0)};  // A = conj(beta_0) = 1+i
  auto sys = assemble_system(beta);
  CHECK(std::abs(sys.H(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(sys.K(0, 0) - 1.0) < 1e-15);
  Complex eta = -cayley_transform(sys.A)(0, 0);
  CHECK(std::abs(eta - Complex(0.0, 1.0)) < 1e-14);
  CHECK(cot_identity_residual(sys, eta) < 1e-12);
}

TEST_CASE("cot_identity_residual across instances") {
  auto p0 = zero_params(3);
  auto sys0 = assemble_system(beta_from_charpoly(p0, default_zeta(p0)));
  auto zeros0 = schur::popuc_zeros(p0);
  for (int k = 0; k < zeros0.size(); ++k)
    CHECK(cot_identity_residual(sys0, zeros0.eigenvalues[k]) <= 1e-9);

  for (std::uint64_t s = 0; s < 10; ++s) {
    auto p = schur::random_parameters(3 + static_cast<int>(s % 8), 7000 + s);
    auto sys = assemble_system(beta_from_charpoly(p, default_zeta(p)));
    auto zeros = schur::popuc_zeros(p);
    for (int k = 0; k < zeros.size(); ++k)
      CHECK(cot_identity_residual(sys, zeros.eigenvalues[k]) <= 1e-8);
  }
}

TEST_CASE("cot_identity_residual rejects eta at zeta") {
  auto p = zero_params(2);
  Complex zeta = default_zeta(p);
  auto sys = assemble_system(beta_from_charpoly(p, zeta));
  CHECK_THROWS_AS((void)cot_identity_residual(sys, zeta), InputError);
}

TEST_CASE("cayley_unitarity_residual") {
  BetaSequence b1;
  b1.zeta = 1.0;
  b1.zeta_sqrt = 1.0;
  b1.values = {Complex(2.0, 0.3)};
  CHECK(cayley_unitarity_residual(assemble_system(b1)) <= 1e-15);

  auto p = schur::random_parameters(6, 55);
  CHECK(cayley_unitarity_residual(assemble_system(beta_from_charpoly(p, default_zeta(p)))) <= 1e-9);

  auto p8 = zero_params(8);
  CHECK(cayley_unitarity_residual(assemble_system(beta_from_charpoly(p8, default_zeta(p8)))) <=
        1e-9);
}

TEST_CASE("default_zeta gap midpoints") {
  // cube roots of unity: equal gaps, tie broken by smallest argument -> pi/3
  CHECK(std::abs(default_zeta(zero_params(2)) - std::polar(1.0, kPi / 3.0)) < 1e-12);
  // spectrum {-1, 1} -> i
  CHECK(std::abs(default_zeta(zero_params(1)) - Complex(0.0, 1.0)) < 1e-12);

  for (std::uint64_t s = 0; s < 20; ++s) {
    auto p = schur::random_parameters(4 + static_cast<int>(s % 6), 8000 + s);
    Complex zeta = default_zeta(p);
    auto zeros = schur::popuc_zeros(p);
    double dist = 4.0;
    for (auto z : zeros.eigenvalues) dist = std::min(dist, std::abs(zeta - z));
    CHECK(dist > 1e-6);
  }
}
