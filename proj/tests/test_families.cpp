#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "popuc/families.hpp"
#include "popuc/io.hpp"

using namespace popuc;
using namespace popuc::families;

TEST_CASE("jacobi_lambdas recursion") {
  auto lam = jacobi_lambdas(1.0, 1);
  REQUIRE(lam.size() == 2);
  CHECK(lam[0] == doctest::Approx(1.0));
  CHECK(lam[1] == doctest::Approx(0.5));  // 1/(1 * 2 * 1)
  for (double v : jacobi_lambdas(0.5, 8)) CHECK(v > 0.0);
  CHECK_THROWS_AS((void)jacobi_lambdas(-1.0, 3), InputError);
}

TEST_CASE("hypergeometric_beta values") {
  // beta_j = (j + a - ib) lambda_{j+1}; with a = 1: beta_0 = 1 - ib, beta_1 = (2 - ib)/2
  auto beta = hypergeometric_beta(1.0, 1, 3.0);
  REQUIRE(beta.order() == 2);
  CHECK(std::abs(beta.values[0] - Complex(1.0, -3.0)) < 1e-14);
  CHECK(std::abs(beta.values[1] - Complex(1.0, -1.5)) < 1e-14);
  CHECK(std::abs(beta.zeta - 1.0) < 1e-15);

  // Re(beta_j) independent of b
  auto b0 = hypergeometric_beta(2.5, 4, 0.0);
  auto b7 = hypergeometric_beta(2.5, 4, 7.0);
  for (int j = 0; j < b0.order(); ++j)
    CHECK(b0.values[j].real() == doctest::Approx(b7.values[j].real()));
}

TEST_CASE("chain_sequence_check") {
  auto r = chain_sequence_check(1.0, 1);
  REQUIRE(r.ok);
  CHECK(r.g[1] == doctest::Approx(0.25));  // s_1 = 2/8, the constant a = 1 sequence

  auto r8 = chain_sequence_check(0.5, 8);
  REQUIRE(r8.ok);
  for (size_t j = 1; j < r8.g.size(); ++j) {
    CHECK(r8.g[j] > 0.0);
    CHECK(r8.g[j] < 1.0);
  }
}

TEST_CASE("chain sequence pass implies Cholesky succeeds on H") {
  for (double a : {0.5, 1.0, 2.5}) {
    for (int n : {2, 5, 8}) {
      REQUIRE(chain_sequence_check(a, n).ok);
      for (double b : {0.0, 1.0, 4.0}) {
        auto sys = tridiag::assemble_system(hypergeometric_beta(a, n, b));
        CHECK(numerics::cholesky(sys.H).ok);
      }
    }
  }
}

TEST_CASE("hypergeometric_polynomial closed forms") {
  double a = 1.3, b = 0.7;
  Complex root = -Complex(a, -b) / Complex(a, b);
  CHECK(std::abs(hypergeometric_polynomial(a, b, 1, root)) < 1e-12);
  CHECK(std::abs(std::abs(root) - 1.0) < 1e-15);
  CHECK(std::abs(hypergeometric_polynomial(2.0, 0.0, 1, Complex(-1.0))) < 1e-12);
}

TEST_CASE("hypergeometric zeros on the circle, simple") {
  for (double a : {0.5, 1.0, 2.5}) {
    for (int m : {3, 6}) {
      auto zeros = hypergeometric_zeros(a, 1.7, m);
      REQUIRE(static_cast<int>(zeros.size()) == m);
      for (size_t k = 0; k < zeros.size(); ++k) {
        CHECK(std::abs(std::abs(zeros[k]) - 1.0) < 1e-8);
        CHECK(std::abs(hypergeometric_polynomial(a, 1.7, m, zeros[k])) < 1e-6);
        for (size_t l = k + 1; l < zeros.size(); ++l)
          CHECK(std::abs(zeros[k] - zeros[l]) > 1e-8);
      }
    }
  }
}

TEST_CASE("beta route and recurrence route share their zeros") {
  for (double a : {0.5, 1.0, 2.5}) {
    for (int n : {2, 5}) {
      double b = 2.4;
      auto beta = hypergeometric_beta(a, n, b);
      auto proots = numerics::poly_roots(tridiag::p_top_coeffs(beta));
      auto rroots = hypergeometric_zeros(a, b, n + 1);
      REQUIRE(proots.size() == rroots.size());
      for (auto pz : proots) {
        double best = 4.0;
        for (auto rz : rroots) best = std::min(best, std::abs(pz - rz));
        CHECK(best < 1e-8);
      }
    }
  }
}

TEST_CASE("table1 matrices") {
  auto H = table1_H(5, 0.0);
  auto eig = numerics::hermitian_eig(H);
  const double expect[5] = {-std::sqrt(3.0), -1.0, 0.0, 1.0, std::sqrt(3.0)};
  for (int k = 0; k < 5; ++k) CHECK(eig.values(k).real() == doctest::Approx(expect[k]).epsilon(1e-12));

  for (double t : {-9.0, 0.3, 14.0}) {
    auto K = table1_K(5, t);
    for (int k = 0; k < 5; ++k) {
      CHECK(K(k, k).real() >= kPi - 1.0);
      CHECK(K(k, k).real() <= kPi + 1.0);
    }
    CHECK(numerics::definiteness(K) == numerics::Definiteness::Positive);
  }
}

TEST_CASE("table1 family reproduces the first reference row") {
  auto fam = table1_family(5);
  auto angles = monotone::family_angles(fam, -9.0);
  const double row[5] = {0.185831, 0.335069, 0.578815, 0.86836, 1.11515};
  for (int k = 0; k < 5; ++k) CHECK(std::abs(angles[k] - row[k]) < 5e-6);
}

TEST_CASE("tabulated schur family") {
  const char* path = "tab_schur.fam";
  {
    std::ofstream f(path);
    f << "# two-row family\nkind schur\norder 3\n";
    f << "0,0.1+0i,0.2+0i,1+0i\n";
    f << "1,0.15+0i,0.2+0i,1+0i\n";
  }
  auto fam = tabulated_family(path);
  CHECK(fam.exact_grid());
  monotone::ensure_zeta(fam, fam.grid);
  CHECK_NOTHROW((void)monotone::family_angles(fam, 0.0));
  CHECK_NOTHROW((void)monotone::family_angles(fam, 1.0));
  CHECK_THROWS_AS((void)monotone::family_angles(fam, 0.5), FamilyError);
  std::remove(path);
}

TEST_CASE("tabulated family rejects a non-increasing t column") {
  const char* path = "tab_bad.fam";
  {
    std::ofstream f(path);
    f << "kind schur\norder 2\n1,0.1+0i,1+0i\n0,0.1+0i,1+0i\n";
  }
  CHECK_THROWS_AS((void)tabulated_family(path), InputError);
  std::remove(path);
}

TEST_CASE("matrix family emit and re-ingest round trip") {
  const char* path = "tab_roundtrip.fam";
  auto fam = table1_family(4);
  std::vector<double> grid{-2.0, -1.0, 0.0, 1.5};
  emit_tabulated_matrix(path, fam, grid);
  auto back = tabulated_family(path);
  for (double t : grid) {
    auto a1 = monotone::family_angles(fam, t);
    auto a2 = monotone::family_angles(back, t);
    REQUIRE(a1.size() == a2.size());
    for (size_t k = 0; k < a1.size(); ++k) CHECK(std::abs(a1[k] - a2[k]) < 1e-12);
  }
  std::remove(path);
}

TEST_CASE("hypergeometric family classification sweep stays clockwise") {
  auto fam = hypergeometric_family(1.0, 2);
  for (double b : {0.5, 3.0, 8.0}) {
    auto pc = monotone::classify_point(fam, b, monotone::default_step(b));
    CHECK(pc.predicted == monotone::Motion::Clockwise);
  }
}
