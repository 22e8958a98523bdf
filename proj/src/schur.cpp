#include "popuc/schur.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace popuc::schur {

void SchurParameters::validate() const {
  for (int j = 0; j < n(); ++j) {
    if (!is_finite(alphas[j]))
      throw InputError("SchurParameters: alpha_" + std::to_string(j) + " not finite");
    if (std::abs(alphas[j]) >= 1.0 - 1e-12)
      throw InputError("SchurParameters: |alpha_" + std::to_string(j) + "| not strictly inside the unit disk");
  }
  if (!is_finite(tau) || std::abs(std::abs(tau) - 1.0) > 1e-12)
    throw InputError("SchurParameters: |tau| != 1");
}

static double rho_of(Complex a) { return std::sqrt(std::max(0.0, 1.0 - std::norm(a))); }

// Closed-form entry display: G(i, j) = -alpha_{i-1} * rho_i ... rho_{j-1} * conj(alpha_j)
// with alpha_{-1} := -1 and conj(alpha_n) meaning conj(tau_n).
static Matrix closed_form(const SchurParameters& p) {
  const int n = p.n();
  const int m = n + 1;
  Matrix G = Matrix::Zero(m, m);
  std::vector<double> rho(n);
  for (int j = 0; j < n; ++j) rho[j] = rho_of(p.alphas[j]);
  auto top = [&](int j) { return j < n ? std::conj(p.alphas[j]) : std::conj(p.tau); };
  for (int i = 0; i < m; ++i) {
    Complex lead = (i == 0) ? Complex(1.0, 0.0) : -p.alphas[i - 1];
    Complex acc = lead;
    for (int j = i; j < m; ++j) {
      G(i, j) = acc * top(j);
      if (j < n) acc *= rho[j];
    }
    if (i >= 1) G(i, i - 1) = rho[i - 1];
  }
  return G;
}

UnitaryHessenberg build_hessenberg(const SchurParameters& params) {
  params.validate();
  const int n = params.n();
  const int m = n + 1;
  Matrix G = Matrix::Identity(m, m);
  for (int j = 0; j < n; ++j) {
    const Complex a = params.alphas[j];
    const double rho = rho_of(a);
    // right-multiply by G_j = diag(I_j, Theta_j, I_{n-j-1}): mixes columns j, j+1
    for (int i = 0; i < m; ++i) {
      Complex cj = G(i, j), cj1 = G(i, j + 1);
      G(i, j) = cj * std::conj(a) + cj1 * rho;
      G(i, j + 1) = cj * rho - cj1 * a;
    }
  }
  for (int i = 0; i < m; ++i) G(i, m - 1) *= std::conj(params.tau);

  if (numerics::max_norm(G - closed_form(params)) > 1e-13)
    throw NumericsFault("build_hessenberg: factored product disagrees with closed form");
  if (numerics::max_norm(G.adjoint() * G - Matrix::Identity(m, m)) > 1e-12)
    throw NumericsFault("build_hessenberg: unitarity residual out of contract");
  for (int i = 0; i + 2 < m; ++i)
    for (int j = i + 2; j < m; ++j) G(j, i) = 0.0;
  return UnitaryHessenberg{std::move(G), params};
}

SchurParameters recover_parameters(const Matrix& M) {
  const int m = static_cast<int>(M.rows());
  if (m < 2 || M.cols() != m) throw InputError("recover_parameters: matrix must be square of order >= 2");
  for (int i = 0; i + 2 < m; ++i)
    for (int j = i + 2; j < m; ++j)
      if (std::abs(M(j, i)) > 1e-12) throw InputError("recover_parameters: matrix not upper Hessenberg");
  if (numerics::max_norm(M.adjoint() * M - Matrix::Identity(m, m)) > 1e-10)
    throw InputError("recover_parameters: matrix not unitary");
  for (int i = 1; i < m; ++i) {
    if (!(M(i, i - 1).real() > 1e-12) || std::abs(M(i, i - 1).imag()) > 1e-12)
      throw InputError("recover_parameters: subdiagonal entry " + std::to_string(i - 1) +
                       " not strictly positive");
  }

  // peel the Givens factors: after removing G_0..G_{j-1}, entry (j, j) is conj(alpha_j)
  Matrix W = M;
  SchurParameters out;
  out.alphas.resize(m - 1);
  for (int j = 0; j + 1 < m; ++j) {
    Complex a = std::conj(W(j, j));
    if (std::abs(a) >= 1.0 - 1e-12)
      throw InputError("recover_parameters: recovered |alpha_" + std::to_string(j) + "| >= 1");
    out.alphas[j] = a;
    const double rho = rho_of(a);
    // left-multiply rows j, j+1 by Theta_j^{-1} = Theta_j^*
    for (int c = 0; c < m; ++c) {
      Complex rj = W(j, c), rj1 = W(j + 1, c);
      W(j, c) = a * rj + rho * rj1;
      W(j + 1, c) = rho * rj - std::conj(a) * rj1;
    }
  }
  out.tau = std::conj(W(m - 1, m - 1));
  out.tau /= std::abs(out.tau);
  out.validate();
  return out;
}

Complex hessenberg_charpoly(const Matrix& M, Complex z) {
  const int m = static_cast<int>(M.rows());
  // d[k] = det of k-by-k leading block of (zI - M); expand along last column
  std::vector<Complex> d(m + 1);
  d[0] = 1.0;
  for (int k = 1; k <= m; ++k) {
    auto T = [&](int i, int j) { return (i == j ? z : Complex(0.0)) - M(i, j); };
    Complex sum = T(k - 1, k - 1) * d[k - 1];
    Complex prod = 1.0;
    for (int i = k - 2; i >= 0; --i) {
      prod *= T(i + 1, i);
      double sign = ((k - 1 - i) % 2 == 0) ? 1.0 : -1.0;
      sum += sign * T(i, k - 1) * prod * d[i];
    }
    d[k] = sum;
  }
  return d[m];
}

std::vector<Complex> hessenberg_charpoly_coeffs(const Matrix& M) {
  const int m = static_cast<int>(M.rows());
  // interpolate the monic degree-m polynomial from m evaluations off the circle
  std::vector<Complex> zs(m), vals(m);
  for (int k = 0; k < m; ++k) {
    zs[k] = std::polar(1.9, 0.31 + kTwoPi * k / m);
    vals[k] = hessenberg_charpoly(M, zs[k]) - std::pow(zs[k], m);
  }
  Matrix V(m, m);
  Vector rhs(m);
  for (int k = 0; k < m; ++k) {
    Complex p = 1.0;
    for (int c = 0; c < m; ++c) {
      V(k, c) = p;
      p *= zs[k];
    }
    rhs(k) = vals[k];
  }
  Vector low = numerics::solve(V, rhs);
  std::vector<Complex> coeffs(m + 1);
  for (int c = 0; c < m; ++c) coeffs[c] = low(c);
  coeffs[m] = 1.0;
  return coeffs;
}

Complex popuc_eval(const SchurParameters& params, Complex z) {
  params.validate();
  return hessenberg_charpoly(closed_form(params), z);
}

EigenAngleSet popuc_zeros(const SchurParameters& params) {
  auto G = build_hessenberg(params);
  auto eig = numerics::general_eig(G.matrix);
  const int m = G.source.order();
  EigenAngleSet out;
  out.angles.resize(m);
  out.eigenvalues.resize(m);
  out.vectors.resize(m, m);
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> ang(m);
  for (int k = 0; k < m; ++k) {
    Complex eta = eig.values(k);
    if (std::abs(std::abs(eta) - 1.0) > 1e-10)
      throw NumericsFault("popuc_zeros: eigenvalue off the unit circle");
    ang[k] = arg_pos(eta);
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ang[a] < ang[b]; });
  for (int k = 0; k < m; ++k) {
    out.angles[k] = ang[idx[k]];
    out.eigenvalues[k] = eig.values(idx[k]);
    out.vectors.col(k) = eig.vectors.col(idx[k]);
  }
  return out;
}

// Backward Moebius recursion for the pseudoreflection coefficient tau_j(zeta).
static Complex tau_at(const SchurParameters& p, Complex zeta, int j) {
  Complex t = p.tau;
  for (int k = p.n() - 1; k >= j; --k) {
    Complex num = std::conj(zeta) * p.alphas[k] + t;
    Complex den = std::conj(p.alphas[k]) * t + std::conj(zeta);
    if (std::abs(den) < 1e-14) throw NumericsFault("pseudoreflection recursion: vanishing denominator");
    t = num / den;
  }
  return t;
}

double schur_complement_check(const SchurParameters& params, Complex zeta, int j) {
  params.validate();
  const int n = params.n();
  if (j < 1 || j > n) throw InputError("schur_complement_check: j out of range");
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) throw InputError("schur_complement_check: |zeta| != 1");
  if (std::abs(popuc_eval(params, zeta)) < 1e-10)
    throw InputError("schur_complement_check: zeta must avoid spectrum");

  Matrix G = build_hessenberg(params).matrix;
  const int m = n + 1;
  const int a = j + 1;       // leading block size
  const int b = m - a;       // trailing block size
  Matrix G11 = G.topLeftCorner(a, a);
  Matrix G12 = G.topRightCorner(a, b);
  Matrix G21 = G.bottomLeftCorner(b, a);
  Matrix G22 = G.bottomRightCorner(b, b);
  Matrix lhs = G11;
  if (b > 0) {
    Matrix S = G22 - zeta * Matrix::Identity(b, b);
    Matrix X(b, a);
    for (int c = 0; c < a; ++c) X.col(c) = numerics::solve(S, Vector(G21.col(c)));
    lhs -= G12 * X;
  }

  SchurParameters sub;
  sub.alphas.assign(params.alphas.begin(), params.alphas.begin() + j);
  sub.tau = tau_at(params, zeta, j);
  sub.tau /= std::abs(sub.tau);
  Matrix rhs = build_hessenberg(sub).matrix;
  return numerics::max_norm(lhs - rhs);
}

// canonical double in [0,1) from the top 53 bits; keeps the stream
// identical across standard libraries
static double unit_double(std::mt19937_64& gen) {
  return std::ldexp(static_cast<double>(gen() >> 11), -53);
}

SchurParameters random_parameters(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_parameters: n must be >= 1");
  std::mt19937_64 gen(seed);
  SchurParameters p;
  p.alphas.resize(n);
  for (int j = 0; j < n; ++j) {
    double r = 0.95 * std::sqrt(unit_double(gen));
    double th = kTwoPi * unit_double(gen);
    p.alphas[j] = std::polar(r, th);
  }
  p.tau = std::polar(1.0, kTwoPi * unit_double(gen));
  p.validate();
  return p;
}

}  // namespace popuc::schur
