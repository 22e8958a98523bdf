#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "popuc/tridiag.hpp"

namespace popuc::monotone {

using numerics::Definiteness;
using schur::SchurParameters;
using tridiag::BetaSequence;
using tridiag::DissipativeSystem;

enum class FamilyKind { Schur, Matrix };
enum class Motion { CounterClockwise, Clockwise, None };

std::string motion_name(Motion m);

// A one-parameter family: either t -> beta/Schur data (with a fixed zeta)
// or t -> strictly dissipative A(t).
struct ParameterFamily {
  FamilyKind kind = FamilyKind::Schur;
  std::string name;

  Complex zeta{1.0, 0.0};
  bool zeta_chosen = false;  // false: pick via default_zeta before a sweep
  std::function<BetaSequence(double)> beta_at;       // Schur kind
  std::function<SchurParameters(double)> params_at;  // Schur kind, optional
  std::function<Matrix(double)> matrix_at;           // Matrix kind: A(t)

  std::vector<double> grid;  // nonempty: evaluable only on these t (no interpolation)
  bool exact_grid() const { return !grid.empty(); }
  void check_on_grid(double t) const;  // throws FamilyError
};

// Schur-kind family from t -> SchurParameters; zeta fixed now or chosen at
// sweep time by default_zeta at the grid midpoint.
ParameterFamily make_schur_family(std::string name,
                                  std::function<SchurParameters(double)> params_at,
                                  std::optional<Complex> zeta = std::nullopt);

ParameterFamily make_beta_family(std::string name, Complex zeta,
                                 std::function<BetaSequence(double)> beta_at);

ParameterFamily make_matrix_family(std::string name, std::function<Matrix(double)> matrix_at);

// Binds zeta for a Schur family (validated against the spectrum at every grid
// point, re-chosen on collision); appends a note when re-chosen.
void ensure_zeta(ParameterFamily& family, const std::vector<double>& grid,
                 std::vector<std::string>* notes = nullptr);

Matrix family_matrix(const ParameterFamily& family, double t);  // A(t)
DissipativeSystem family_system(const ParameterFamily& family, double t);  // Schur kind

// Tracked angle multiset, ascending: args of spec(G) (Schur kind) or of
// eig(A^{-1} A*) (Matrix kind).
std::vector<double> family_angles(const ParameterFamily& family, double t);

// h = 1e-5 * max(1, |t|)
double default_step(double t);

struct DerivativePair {
  Matrix dH, dK;
  Matrix dR;  // central difference of H^{1/2}; empty when H(t +- h) is not PD
  double t = 0.0, step = 0.0;
};
DerivativePair derivatives(const ParameterFamily& family, double t, double h);

struct PointClassification {
  double t = 0.0;
  char x_sign = '~', y_sign = '~';  // '+', '-', '0' (vanishes), '~' (mixed/indefinite)
  char side_letter = 'K';           // 'K' for Schur kind, 'H' for Matrix kind
  char side_sign = '~';
  std::string label;                // e.g. "I++&H-"
  Motion predicted = Motion::None;
};

PointClassification classify_matrix_point(const ParameterFamily& family, double t, double h);
PointClassification classify_beta_point(const ParameterFamily& family, double t, double h);
PointClassification classify_point(const ParameterFamily& family, double t, double h);

// Quadratic form (p, (dK/dt - L - L*) p) at the zero eta; negative iff eta
// moves counterclockwise.
double motion_certificate(const DissipativeSystem& system, const DerivativePair& derivs,
                          Complex eta);

// Definiteness of (L + L*) - dK/dt; Positive implies counterclockwise motion
// of every eigenvalue.
Definiteness lyapunov_sufficient(const DerivativePair& derivs, const DissipativeSystem& system);

// Relative deviation between the two sides of the derivative identity at the
// eta_id-th zero (ascending-angle index at t).
double derivative_identity_residual(const ParameterFamily& family, double t, int eta_id,
                                    double h);

struct EigenPath {
  std::vector<double> grid;
  std::vector<std::vector<double>> wrapped;    // [id][k], in (0, 2pi]
  std::vector<std::vector<double>> unwrapped;  // [id][k], continuous lifts
  int ids() const { return static_cast<int>(wrapped.size()); }
};

EigenPath track_eigenangles(const ParameterFamily& family, const std::vector<double>& grid);

struct ClassifiedInterval {
  double t_lo = 0.0, t_hi = 0.0;
  std::string label;
  Motion predicted = Motion::None;
  Motion observed = Motion::None;
  bool agree = true;  // vacuously true when predicted == None
};

struct ClassificationReport {
  std::vector<double> grid;
  std::vector<PointClassification> points;
  std::vector<ClassifiedInterval> intervals;
  EigenPath path;
  Complex zeta_used{1.0, 0.0};
  std::vector<std::string> notes;
};

ClassificationReport scan_intervals(const ParameterFamily& family,
                                    const std::vector<double>& grid);

}  // namespace popuc::monotone
