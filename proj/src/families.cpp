#include "popuc/families.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "popuc/io.hpp"

namespace popuc::families {

using tridiag::BetaProvenance;
using tridiag::BetaSequence;

std::vector<double> jacobi_lambdas(double a, int n) {
  if (!(a > 0.0)) throw InputError("jacobi_lambdas: a must be positive");
  if (n < 1) throw InputError("jacobi_lambdas: n must be >= 1");
  std::vector<double> lam(n + 1);
  lam[0] = 1.0;  // lambda_1
  for (int j = 1; j <= n; ++j) lam[j] = 1.0 / (j * (2.0 * a + j - 1.0) * lam[j - 1]);
  return lam;
}

tridiag::BetaSequence hypergeometric_beta(double a, int n, double b) {
  auto lam = jacobi_lambdas(a, n);
  BetaSequence beta;
  beta.zeta = Complex(1.0, 0.0);
  beta.zeta_sqrt = Complex(1.0, 0.0);
  beta.provenance = BetaProvenance::Direct;
  beta.values.resize(n + 1);
  for (int j = 0; j <= n; ++j) beta.values[j] = Complex(j + a, -b) * lam[j];
  return beta;
}

Complex hypergeometric_polynomial(double a, double b, int m, Complex z) {
  if (!(a > 0.0)) throw InputError("hypergeometric_polynomial: a must be positive");
  if (m < 1) throw InputError("hypergeometric_polynomial: degree must be >= 1");
  Complex rm1 = 0.0, r0 = 1.0;
  for (int j = 0; j < m; ++j) {
    Complex r1 = (Complex(a + j, -b) + Complex(a + j, b) * z) * r0 -
                 (j * (2.0 * a + j - 1.0)) * z * rm1;
    rm1 = r0;
    r0 = r1;
  }
  return r0;
}

std::vector<Complex> hypergeometric_zeros(double a, double b, int m) {
  // coefficient recurrence mirroring the value recurrence
  std::vector<Complex> rm1{}, r0{1.0};
  for (int j = 0; j < m; ++j) {
    std::vector<Complex> next(r0.size() + 1, Complex(0.0));
    for (size_t k = 0; k < r0.size(); ++k) {
      next[k] += Complex(a + j, -b) * r0[k];
      next[k + 1] += Complex(a + j, b) * r0[k];
    }
    for (size_t k = 0; k < rm1.size(); ++k) next[k + 1] -= (j * (2.0 * a + j - 1.0)) * rm1[k];
    rm1 = std::move(r0);
    r0 = std::move(next);
  }
  return numerics::poly_roots(r0);
}

ParameterFamily hypergeometric_family(double a, int n) {
  auto lam = jacobi_lambdas(a, n);  // validates a, n
  auto fam = monotone::make_beta_family(
      "hypergeom(a=" + std::to_string(a) + ",n=" + std::to_string(n) + ")", Complex(1.0, 0.0),
      [a, n](double b) {
        // zeta = 1 is admissible only while r_{n+1}(1) != 0
        double r = 1.0, rm1 = 0.0, scale = 1.0;
        for (int j = 0; j <= n; ++j) {
          double r1 = 2.0 * (a + j) * r - j * (2.0 * a + j - 1.0) * rm1;
          rm1 = r;
          r = r1;
          scale = std::max(scale, std::abs(r));
        }
        (void)b;  // r_{n+1}(1) does not depend on b
        if (std::abs(r) <= 1e-10 * scale)
          throw FamilyError("hypergeometric family: r_{n+1}(1) = 0, zeta = 1 inadmissible");
        return hypergeometric_beta(a, n, b);
      });
  return fam;
}

ChainSequenceResult chain_sequence_check(double a, int n) {
  if (!(a > 0.0)) throw InputError("chain_sequence_check: a must be positive");
  ChainSequenceResult res;
  res.g.assign(1, 0.0);
  for (int j = 1; j <= n; ++j) {
    // (1/2)^2 / (Re beta_{j-1} Re beta_j): the ultraspherical chain sequence
    double s = j * (2.0 * a + j - 1.0) / (4.0 * (a + j - 1.0) * (a + j));
    double g = s / (1.0 - res.g.back());
    if (!(g > 0.0 && g < 1.0)) {
      res.ok = false;
      res.fail_index = j;
      return res;
    }
    res.g.push_back(g);
  }
  res.ok = true;
  return res;
}

Matrix table1_H(int n, double t) {
  Matrix H = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) H(k, k) = t;
  for (int k = 0; k + 1 < n; ++k) H(k, k + 1) = H(k + 1, k) = 1.0;
  return H;
}

Matrix table1_K(int n, double t) {
  Matrix K = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) K(k, k) = kPi + std::cos(t) / (k + 1.0);
  for (int k = 0; k + 1 < n; ++k) K(k, k + 1) = K(k + 1, k) = 1.0;
  return K;
}

ParameterFamily table1_family(int n) {
  if (n < 2) throw InputError("table1_family: n must be >= 2");
  return monotone::make_matrix_family(
      "table1(n=" + std::to_string(n) + ")",
      [n](double t) -> Matrix { return table1_H(n, t) + Complex(0.0, 1.0) * table1_K(n, t); });
}

namespace {

struct TabRow {
  double t;
  std::vector<Complex> entries;
};

}  // namespace

ParameterFamily tabulated_family(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open family file '" + path + "'");
  std::string line, kind;
  int order = 0, lineno = 0;
  std::vector<TabRow> rows;
  while (std::getline(f, line)) {
    ++lineno;
    std::string s = io::trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("kind ", 0) == 0) {
      kind = io::trim(s.substr(5));
      if (kind != "schur" && kind != "matrix")
        throw InputError("line " + std::to_string(lineno) + ": kind must be schur or matrix");
      continue;
    }
    if (s.rfind("order ", 0) == 0) {
      try {
        order = std::stoi(io::trim(s.substr(6)));
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": malformed order");
      }
      if (order < 1) throw InputError("line " + std::to_string(lineno) + ": order must be >= 1");
      continue;
    }
    if (kind.empty() || order == 0)
      throw InputError("line " + std::to_string(lineno) + ": data before kind/order header");
    auto fields = io::split(s, ',');
    size_t expected = 1 + (kind == "schur" ? static_cast<size_t>(order)
                                           : static_cast<size_t>(order) * order);
    if (fields.size() != expected)
      throw InputError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(expected) + " fields, got " + std::to_string(fields.size()));
    TabRow row;
    try {
      row.t = std::stod(fields[0]);
      for (size_t k = 1; k < fields.size(); ++k) row.entries.push_back(io::parse_complex(fields[k]));
    } catch (const std::exception& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!rows.empty() && !(row.t > rows.back().t))
      throw InputError("line " + std::to_string(lineno) + ": t column not strictly increasing");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("family file '" + path + "' has no data rows");

  auto table = std::make_shared<std::vector<TabRow>>(std::move(rows));
  auto lookup = [table, path](double t) -> const TabRow& {
    for (const auto& row : *table)
      if (std::abs(row.t - t) <= 1e-12 * std::max(1.0, std::abs(row.t))) return row;
    throw FamilyError("family '" + path + "' is not tabulated at t = " + std::to_string(t));
  };

  ParameterFamily fam;
  if (kind == "schur") {
    int n = order - 1;
    fam = monotone::make_schur_family(
        "file:" + path,
        [lookup, n, lineno_path = path](double t) {
          const TabRow& row = lookup(t);
          schur::SchurParameters p;
          p.alphas.assign(row.entries.begin(), row.entries.begin() + n);
          p.tau = row.entries.back();
          try {
            p.validate();
          } catch (const InputError& e) {
            throw InputError("family '" + lineno_path + "', row t = " + std::to_string(t) + ": " +
                             e.what());
          }
          return p;
        });
  } else {
    fam = monotone::make_matrix_family("file:" + path, [lookup, order](double t) -> Matrix {
      const TabRow& row = lookup(t);
      Matrix A(order, order);
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) A(i, j) = row.entries[i * order + j];
      return A;
    });
  }
  for (const auto& row : *table) fam.grid.push_back(row.t);
  return fam;
}

void emit_tabulated_matrix(const std::string& path, const ParameterFamily& family,
                           const std::vector<double>& grid) {
  std::ostringstream out;
  Matrix first = monotone::family_matrix(family, grid.at(0));
  int order = static_cast<int>(first.rows());
  out << "kind matrix\norder " << order << "\n";
  for (double t : grid) {
    Matrix A = monotone::family_matrix(family, t);
    char tb[40];
    std::snprintf(tb, sizeof(tb), "%.17g", t);
    out << tb;
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) out << "," << io::format_complex(A(i, j));
    out << "\n";
  }
  io::write_file_atomic(path, out.str());
}

}  // namespace popuc::families
