#include "popuc/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace popuc::numerics {

double max_norm(const Matrix& M) {
  return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

static void require_hermitian(const Matrix& M, const char* who) {
  if (M.rows() != M.cols()) throw InputError(std::string(who) + ": matrix not square");
  double dev = max_norm(M - M.adjoint());
  if (dev > 1e-12 * (1.0 + max_norm(M)))
    throw InputError(std::string(who) + ": matrix not Hermitian, deviation " + std::to_string(dev));
}

CholeskyResult cholesky(const Matrix& M, double shift) {
  require_hermitian(M, "cholesky");
  if (!std::isfinite(shift) || !M.allFinite()) throw NumericsFault("cholesky: non-finite input");
  const int n = static_cast<int>(M.rows());
  CholeskyResult res;
  res.L = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = M(j, j).real() - shift;
    for (int k = 0; k < j; ++k) d -= std::norm(res.L(j, k));
    if (d <= 0.0) {
      res.ok = false;
      res.failed_pivot = j;
      return res;
    }
    res.L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      Complex s = M(i, j);
      for (int k = 0; k < j; ++k) s -= res.L(i, k) * std::conj(res.L(j, k));
      res.L(i, j) = s / res.L(j, j);
    }
  }
  res.ok = true;
  return res;
}

Definiteness definiteness(const Matrix& M) {
  const double delta = 1e-10 * max_norm(M);
  if (cholesky(M, delta).ok) return Definiteness::Positive;
  if (cholesky(-M, delta).ok) return Definiteness::Negative;
  return Definiteness::Indefinite;
}

EigenDecomposition hermitian_eig(const Matrix& M) {
  require_hermitian(M, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  if (es.info() != Eigen::Success) throw NumericsFault("hermitian_eig: solver did not converge");
  EigenDecomposition out;
  out.values = es.eigenvalues().cast<Complex>();
  out.vectors = es.eigenvectors();
  return out;
}

Matrix hermitian_power(const Matrix& M, double exponent) {
  auto chol = cholesky(M, 1e-10 * max_norm(M));
  if (!chol.ok)
    throw NumericsFault("hermitian_power: matrix not positive definite, pivot " +
                        std::to_string(chol.failed_pivot));
  auto eig = hermitian_eig(M);
  const int n = static_cast<int>(M.rows());
  RealVector pw(n);
  for (int k = 0; k < n; ++k) pw(k) = std::pow(eig.values(k).real(), exponent);
  Matrix R = eig.vectors * pw.asDiagonal() * eig.vectors.adjoint();
  return (R + R.adjoint()) / 2.0;
}

Matrix hermitian_sqrt(const Matrix& M) { return hermitian_power(M, 0.5); }

EigenDecomposition general_eig(const Matrix& M) {
  if (M.rows() != M.cols()) throw InputError("general_eig: matrix not square");
  Eigen::ComplexEigenSolver<Matrix> es(M);
  if (es.info() != Eigen::Success) throw NumericsFault("general_eig: solver did not converge");
  EigenDecomposition out;
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();
  const int n = static_cast<int>(M.rows());
  const double scale = std::max(1e-300, M.norm());
  for (int k = 0; k < n; ++k) {
    Vector v = out.vectors.col(k).normalized();
    Complex lam = out.values(k);
    double resid = (M * v - lam * v).norm();
    if (resid > 1e-12 * scale) {
      // one inverse-iteration pass with Rayleigh update
      Matrix S = M - lam * Matrix::Identity(n, n);
      S.diagonal().array() += Complex(1e-14 * scale, 0.0);
      Vector w = S.partialPivLu().solve(v);
      if (w.allFinite() && w.norm() > 0) {
        w.normalize();
        Complex lam2 = (w.adjoint() * M * w)(0, 0);
        if ((M * w - lam2 * w).norm() < resid) {
          v = w;
          lam = lam2;
          resid = (M * v - lam * v).norm();
        }
      }
    }
    out.vectors.col(k) = v;
    out.values(k) = lam;
    if (resid > 1e-9 * scale)
      throw NumericsFault("general_eig: residual " + std::to_string(resid) +
                          " out of contract for eigenpair " + std::to_string(k));
  }
  return out;
}

static Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

static Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
  Complex v = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) v = v * z + double(k) * c[k];
  return v;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
  if (coeffs.size() < 2) throw InputError("poly_roots: degree must be >= 1");
  if (std::abs(coeffs.back()) == 0.0) throw InputError("poly_roots: leading coefficient is zero");
  const int d = static_cast<int>(coeffs.size()) - 1;

  // initial guesses on a circle, golden-angle spacing
  double r0 = std::abs(coeffs[0]) > 0.0
                  ? std::pow(std::abs(coeffs[0] / coeffs.back()), 1.0 / d)
                  : 0.5;
  if (!(r0 > 1e-8)) r0 = 0.5;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k) {
    double th = 0.7 + golden * k;
    z[k] = std::polar(r0 * (1.0 + 1e-3 * k), th);
  }

  double scale = 0.0;
  for (auto& c : coeffs) scale = std::max(scale, std::abs(c));

  const int max_sweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    double step_max = 0.0;
    for (int k = 0; k < d; ++k) {
      Complex p = horner(coeffs, z[k]);
      Complex dp = horner_deriv(coeffs, z[k]);
      Complex ratio = (dp != Complex(0.0)) ? p / dp : Complex(0.0);
      Complex rep = 0.0;
      for (int j = 0; j < d; ++j)
        if (j != k) rep += 1.0 / (z[k] - z[j]);
      Complex denom = 1.0 - ratio * rep;
      Complex step = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
      z[k] -= step;
      step_max = std::max(step_max, std::abs(step));
    }
    converged = step_max < 1e-14 * (1.0 + r0);
  }
  // one Newton polish per root
  for (int k = 0; k < d; ++k) {
    Complex dp = horner_deriv(coeffs, z[k]);
    if (std::abs(dp) > 1e-300) z[k] -= horner(coeffs, z[k]) / dp;
  }
  for (int k = 0; k < d; ++k)
    if (std::abs(horner(coeffs, z[k])) > 1e-10 * scale * std::pow(1.0 + std::abs(z[k]), d))
      throw NumericsFault("poly_roots: root " + std::to_string(k) + " did not converge");
  return z;
}

Vector solve(const Matrix& M, const Vector& b) {
  if (M.rows() != M.cols() || M.rows() != b.size())
    throw InputError("solve: dimension mismatch");
  Eigen::PartialPivLU<Matrix> lu(M);
  double pivot_min = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (pivot_min < 1e-14 * max_norm(M))
    throw NumericsFault("solve: matrix numerically singular");
  return lu.solve(b);
}

}  // namespace popuc::numerics
