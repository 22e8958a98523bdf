#include "popuc/tridiag.hpp"

#include <algorithm>
#include <cmath>

namespace popuc::tridiag {

Complex principal_sqrt(Complex zeta) {
  double half = std::arg(zeta) / 2.0;  // in (-pi/2, pi/2]
  return std::polar(std::sqrt(std::abs(zeta)), half);
}

PseudoReflections pseudo_reflections(const SchurParameters& params, Complex zeta) {
  params.validate();
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
    throw InputError("pseudo_reflections: |zeta| != 1");
  if (std::abs(schur::popuc_eval(params, zeta)) < 1e-10)
    throw InputError("pseudo_reflections: zeta must avoid the spectrum of G");
  const int n = params.n();
  PseudoReflections out;
  out.zeta = zeta;
  out.values.resize(n + 1);
  out.values[n] = params.tau;
  for (int j = n - 1; j >= 0; --j) {
    Complex num = std::conj(zeta) * params.alphas[j] + out.values[j + 1];
    Complex den = std::conj(params.alphas[j]) * out.values[j + 1] + std::conj(zeta);
    if (std::abs(den) < 1e-14)
      throw NumericsFault("pseudo_reflections: vanishing denominator at index " + std::to_string(j));
    out.values[j] = num / den;
    if (std::abs(std::abs(out.values[j]) - 1.0) > 1e-12)
      throw NumericsFault("pseudo_reflections: |tau_j(zeta)| != 1 at index " + std::to_string(j));
  }
  return out;
}

BetaSequence beta_literal(const SchurParameters& params, const PseudoReflections& refl) {
  params.validate();
  const int n = params.n();
  const Complex zeta = refl.zeta;
  const Complex zs = principal_sqrt(zeta);
  auto alpha = [&](int k) { return k >= 0 && k < n ? params.alphas[k] : Complex(0.0); };

  BetaSequence out;
  out.zeta = zeta;
  out.zeta_sqrt = zs;
  out.provenance = BetaProvenance::LiteralFormula;
  out.values.resize(n + 1);

  Complex den0 = zs + refl.values[0] * zs;
  if (std::abs(den0) < 1e-14)
    throw InputError("beta_literal: tau_0(zeta) = -1, beta_0 denominator vanishes");
  out.values[0] = 1.0 / den0;
  for (int j = 1; j <= n; ++j) {
    Complex f1 = std::conj(zeta) + refl.values[j] * std::conj(alpha(j - 1));
    Complex f2 = 1.0 - std::conj(refl.values[j]) * alpha(j + 1);
    if (std::abs(f1) < 1e-14 || std::abs(f2) < 1e-14)
      throw InputError("beta_literal: vanishing factor at index " + std::to_string(j));
    out.values[j] = 1.0 / (out.values[j - 1] * f1 * f2);
  }
  for (int j = 0; j <= n; ++j)
    if (std::abs(out.values[j]) <= 1e-14)
      throw NumericsFault("beta_literal: beta_" + std::to_string(j) + " vanishes");
  return out;
}

BetaSequence beta_from_charpoly(const SchurParameters& params, Complex zeta) {
  auto refl = pseudo_reflections(params, zeta);  // validates params and zeta
  const int n = params.n();

  // P_0 := 1, P_{j+1}(z) := det(zI - G(alpha_0..alpha_{j-1}, tau_j(zeta)))
  auto P = [&](int j, Complex z) -> Complex {
    if (j == 0) return 1.0;
    SchurParameters sub;
    sub.alphas.assign(params.alphas.begin(), params.alphas.begin() + (j - 1));
    sub.tau = refl.values[j - 1] / std::abs(refl.values[j - 1]);
    return schur::popuc_eval(sub, z);
  };

  // sample points off the unit circle
  const Complex zsamp[3] = {std::polar(1.7, 0.7), std::polar(0.41, 2.1), std::polar(2.3, 4.0)};

  // P_{j+1} = (b_j + c_j z) P_j - d_j z P_{j-1}
  std::vector<Complex> b(n + 1), c(n + 1), d(n + 1);
  {
    Matrix M(2, 2);
    Vector r(2);
    for (int k = 0; k < 2; ++k) {
      Complex z = zsamp[k];
      M(k, 0) = P(0, z);
      M(k, 1) = z * P(0, z);
      r(k) = P(1, z);
    }
    Vector s = numerics::solve(M, r);
    b[0] = s(0);
    c[0] = s(1);
    d[0] = 0.0;
  }
  for (int j = 1; j <= n; ++j) {
    Matrix M(3, 3);
    Vector r(3);
    for (int k = 0; k < 3; ++k) {
      Complex z = zsamp[k];
      M(k, 0) = P(j, z);
      M(k, 1) = z * P(j, z);
      M(k, 2) = -z * P(j - 1, z);
      r(k) = P(j + 1, z);
    }
    Vector s = numerics::solve(M, r);
    b[j] = s(0);
    c[j] = s(1);
    d[j] = s(2);
    if (std::abs(d[j]) < 1e-14)
      throw NumericsFault("beta_from_charpoly: degenerate three-term link at index " + std::to_string(j));
  }

  // diagonal rescaling p_j = kappa_j P_j; kappa_0 = 1, |kappa_1| = 1 with the
  // phase fixed by conj-symmetry of the two linear coefficients at j = 0
  std::vector<Complex> kappa(n + 2);
  kappa[0] = 1.0;
  kappa[1] = std::polar(1.0, 0.5 * std::arg(std::conj(b[0]) / c[0]));
  for (int j = 1; j <= n; ++j) kappa[j + 1] = kappa[j - 1] / d[j];

  BetaSequence out;
  out.zeta = zeta;
  out.zeta_sqrt = principal_sqrt(zeta);
  out.provenance = BetaProvenance::RecurrenceMatched;
  out.values.resize(n + 1);
  double scale = 0.0;
  for (int j = 0; j <= n; ++j) scale = std::max({scale, std::abs(b[j]), std::abs(c[j])});
  for (int j = 0; j <= n; ++j) {
    Complex ratio = kappa[j + 1] / kappa[j];
    out.values[j] = ratio * b[j];
    double dev = std::abs(std::conj(out.values[j]) - ratio * c[j]);
    if (dev > 1e-8 * (1.0 + scale))
      throw NumericsFault("beta_from_charpoly: no conj-symmetric rescaling at index " +
                          std::to_string(j) + ", deviation " + std::to_string(dev));
    if (std::abs(out.values[j]) <= 1e-14)
      throw NumericsFault("beta_from_charpoly: beta_" + std::to_string(j) + " vanishes");
  }
  // the phase branch flips the sign of every beta; pick the one with H > O
  if ((out.zeta_sqrt * std::conj(out.values[0])).real() < 0.0)
    for (auto& v : out.values) v = -v;
  return out;
}

DissipativeSystem assemble_system(const BetaSequence& beta) {
  const int m = beta.order();
  if (m < 1) throw InputError("assemble_system: empty beta sequence");
  for (int j = 0; j < m; ++j)
    if (std::abs(beta.values[j]) <= 1e-14)
      throw InputError("assemble_system: beta_" + std::to_string(j) + " vanishes");
  DissipativeSystem sys;
  sys.beta = beta;
  sys.A = Matrix::Zero(m, m);
  for (int j = 0; j < m; ++j) sys.A(j, j) = beta.zeta_sqrt * std::conj(beta.values[j]);
  for (int j = 1; j < m; ++j) sys.A(j, j - 1) = -beta.zeta_sqrt;
  sys.H = (sys.A + sys.A.adjoint()) / 2.0;
  sys.K = (sys.A - sys.A.adjoint()) / Complex(0.0, 2.0);
  auto chol = numerics::cholesky(sys.H, 1e-10 * numerics::max_norm(sys.H));
  if (!chol.ok)
    throw NumericsFault("assemble_system: H not positive definite (pivot " +
                        std::to_string(chol.failed_pivot) +
                        "); beta provenance " +
                        (beta.provenance == BetaProvenance::LiteralFormula ? std::string("literal-formula")
                         : beta.provenance == BetaProvenance::Direct ? std::string("direct")
                                                                    : std::string("recurrence-matched")));
  return sys;
}

std::vector<Complex> p_polynomials(const BetaSequence& beta, Complex z) {
  const int m = beta.order();
  std::vector<Complex> p(m + 1);
  Complex prev = 0.0, cur = 1.0;  // p_{-1}, p_0
  p[0] = cur;
  for (int j = 0; j < m; ++j) {
    Complex next = (beta.values[j] + std::conj(beta.values[j]) * z) * cur - z * prev;
    prev = cur;
    cur = next;
    p[j + 1] = cur;
  }
  return p;
}

std::vector<Complex> p_top_coeffs(const BetaSequence& beta) {
  const int m = beta.order();
  // coefficient recurrence for p_{j+1} = (beta + conj(beta) z) p_j - z p_{j-1}
  std::vector<Complex> pm1{}, p0{1.0};
  for (int j = 0; j < m; ++j) {
    std::vector<Complex> next(p0.size() + 1, Complex(0.0));
    for (size_t k = 0; k < p0.size(); ++k) {
      next[k] += beta.values[j] * p0[k];
      next[k + 1] += std::conj(beta.values[j]) * p0[k];
    }
    for (size_t k = 0; k < pm1.size(); ++k) next[k + 1] -= pm1[k];
    pm1 = std::move(p0);
    p0 = std::move(next);
  }
  Complex lead = p0.back();
  for (auto& v : p0) v /= lead;
  return p0;
}

double matrix_form_residual(const DissipativeSystem& system, Complex z) {
  const int m = system.beta.order();
  auto p = p_polynomials(system.beta, z);
  Vector pv(m);
  for (int j = 0; j < m; ++j) pv(j) = p[j];
  Vector lhs = system.beta.zeta * (system.A.adjoint() * pv) + z * (system.A * pv);
  Vector rhs = Vector::Zero(m);
  rhs(m - 1) = system.beta.zeta_sqrt * p[m];
  return (lhs - rhs).norm() / std::max(1.0, pv.norm());
}

Matrix cayley_transform(const Matrix& A) {
  const int m = static_cast<int>(A.rows());
  Matrix As = A.adjoint();
  Matrix U(m, m);
  for (int c = 0; c < m; ++c) U.col(c) = numerics::solve(A, Vector(As.col(c)));
  return U;
}

double cot_identity_residual(const DissipativeSystem& system, Complex eta) {
  const int m = system.beta.order();
  double phi = arg_pos(std::conj(system.beta.zeta) * eta);
  if (std::min(phi, kTwoPi - phi) < 1e-10)
    throw InputError("cot_identity_residual: eta equals zeta");
  auto p = p_polynomials(system.beta, eta);
  Vector pv(m);
  for (int j = 0; j < m; ++j) pv(j) = p[j];
  double hp = (pv.adjoint() * system.H * pv)(0, 0).real();
  double kp = (pv.adjoint() * system.K * pv)(0, 0).real();
  double lhs = std::cos(phi / 2.0) / std::sin(phi / 2.0);
  return std::abs(lhs - kp / hp);
}

double cayley_unitarity_residual(const DissipativeSystem& system) {
  const int m = system.beta.order();
  Matrix B = Complex(0.0, 1.0) * system.A;
  Matrix Rh = numerics::hermitian_sqrt(system.H);
  Matrix Rhi = numerics::hermitian_power(system.H, -0.5);
  Matrix BiBs = cayley_transform(B);
  Matrix W = Rh * BiBs * Rhi;
  return numerics::max_norm(W.adjoint() * W - Matrix::Identity(m, m));
}

Complex default_zeta(const std::vector<double>& angles) {
  if (angles.empty()) throw InputError("default_zeta: empty spectrum");
  std::vector<double> a = angles;
  std::sort(a.begin(), a.end());
  const int m = static_cast<int>(a.size());
  double best_gap = -1.0, best_mid = 0.0;
  for (int k = 0; k < m; ++k) {
    double lo = (k == 0) ? a[m - 1] - kTwoPi : a[k - 1];
    double gap = a[k] - lo;
    double mid = std::fmod((lo + a[k]) / 2.0 + kTwoPi, kTwoPi);
    if (mid <= 0.0) mid += kTwoPi;  // normalized argument in (0, 2pi]
    if (gap > best_gap + 1e-12 || (std::abs(gap - best_gap) <= 1e-12 && mid < best_mid)) {
      best_gap = gap;
      best_mid = mid;
    }
  }
  return std::polar(1.0, best_mid);
}

Complex default_zeta(const SchurParameters& params) {
  return default_zeta(schur::popuc_zeros(params).angles);
}

}  // namespace popuc::tridiag
