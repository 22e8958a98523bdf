#include "popuc/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "popuc/parallel.hpp"

namespace popuc::monotone {

using numerics::Definiteness;

std::string motion_name(Motion m) {
  switch (m) {
    case Motion::CounterClockwise: return "counterclockwise";
    case Motion::Clockwise: return "clockwise";
    default: return "unclassified";
  }
}

void ParameterFamily::check_on_grid(double t) const {
  if (!exact_grid()) return;
  for (double g : grid)
    if (std::abs(t - g) <= 1e-12 * std::max(1.0, std::abs(g))) return;
  throw FamilyError(name + ": t = " + std::to_string(t) +
                    " is not a tabulated grid point (interpolation disabled)");
}

ParameterFamily make_schur_family(std::string name,
                                  std::function<SchurParameters(double)> params_at,
                                  std::optional<Complex> zeta) {
  ParameterFamily fam;
  fam.kind = FamilyKind::Schur;
  fam.name = std::move(name);
  fam.params_at = std::move(params_at);
  if (zeta) {
    fam.zeta = *zeta;
    fam.zeta_chosen = true;
  }
  return fam;
}

ParameterFamily make_beta_family(std::string name, Complex zeta,
                                 std::function<BetaSequence(double)> beta_at) {
  ParameterFamily fam;
  fam.kind = FamilyKind::Schur;
  fam.name = std::move(name);
  fam.zeta = zeta;
  fam.zeta_chosen = true;
  fam.beta_at = std::move(beta_at);
  return fam;
}

ParameterFamily make_matrix_family(std::string name, std::function<Matrix(double)> matrix_at) {
  ParameterFamily fam;
  fam.kind = FamilyKind::Matrix;
  fam.name = std::move(name);
  fam.matrix_at = std::move(matrix_at);
  return fam;
}

static BetaSequence eval_beta(const ParameterFamily& family, double t) {
  family.check_on_grid(t);
  if (family.beta_at) return family.beta_at(t);
  if (!family.params_at)
    throw FamilyError(family.name + ": Schur family has no evaluator");
  if (!family.zeta_chosen)
    throw FamilyError(family.name + ": zeta not chosen yet (call ensure_zeta before sweeping)");
  return tridiag::beta_from_charpoly(family.params_at(t), family.zeta);
}

void ensure_zeta(ParameterFamily& family, const std::vector<double>& grid,
                 std::vector<std::string>* notes) {
  if (family.kind != FamilyKind::Schur || family.zeta_chosen || !family.params_at) return;
  if (grid.empty()) throw FamilyError("ensure_zeta: empty grid");
  auto valid_everywhere = [&](Complex zeta) {
    for (double t : grid)
      if (std::abs(schur::popuc_eval(family.params_at(t), zeta)) < 1e-8) return false;
    return true;
  };
  double mid = grid[grid.size() / 2];
  Complex zeta = tridiag::default_zeta(family.params_at(mid));
  if (!valid_everywhere(zeta)) {
    bool found = false;
    for (double t : grid) {
      Complex cand = tridiag::default_zeta(family.params_at(t));
      if (valid_everywhere(cand)) {
        if (notes)
          notes->push_back("zeta re-chosen from grid point t = " + std::to_string(t) +
                           " after a spectrum collision");
        zeta = cand;
        found = true;
        break;
      }
    }
    if (!found) throw FamilyError(family.name + ": no collision-free zeta found on the grid");
  }
  family.zeta = zeta;
  family.zeta_chosen = true;
}

DissipativeSystem family_system(const ParameterFamily& family, double t) {
  if (family.kind != FamilyKind::Schur)
    throw FamilyError(family.name + ": schur-family required");
  return tridiag::assemble_system(eval_beta(family, t));
}

Matrix family_matrix(const ParameterFamily& family, double t) {
  if (family.kind == FamilyKind::Schur) return family_system(family, t).A;
  family.check_on_grid(t);
  Matrix A = family.matrix_at(t);
  if (A.rows() != A.cols()) throw FamilyError(family.name + ": A(t) not square");
  return A;
}

// Strict dissipativity certificate for a matrix family: H > O or K > O.
static void require_dissipative(const ParameterFamily& family, const Matrix& A, double t) {
  Matrix H = (A + A.adjoint()) / 2.0;
  Matrix K = (A - A.adjoint()) / Complex(0.0, 2.0);
  if (numerics::definiteness(K) == Definiteness::Positive) return;
  if (numerics::definiteness(H) == Definiteness::Positive) return;
  throw FamilyError(family.name + ": A(t) not strictly dissipative at t = " + std::to_string(t));
}

std::vector<double> family_angles(const ParameterFamily& family, double t) {
  Matrix A = family_matrix(family, t);
  if (family.kind == FamilyKind::Matrix) require_dissipative(family, A, t);
  Matrix U = tridiag::cayley_transform(A);
  auto eig = numerics::general_eig(U);
  std::vector<double> angles(eig.values.size());
  for (int k = 0; k < eig.values.size(); ++k) {
    Complex lam = eig.values(k);
    if (std::abs(std::abs(lam) - 1.0) > 1e-9)
      throw NumericsFault(family.name + ": Cayley-transform eigenvalue off the unit circle");
    // Schur kind tracks eta = -zeta * lambda (the zeros of p_{n+1});
    // matrix kind tracks the eigenvalues of A^{-1} A* themselves
    Complex target = family.kind == FamilyKind::Schur ? -family.zeta * lam : lam;
    angles[k] = arg_pos(target);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double default_step(double t) { return 1e-5 * std::max(1.0, std::abs(t)); }

static Matrix hermitian_part(const Matrix& A) { return (A + A.adjoint()) / 2.0; }
static Matrix skew_part(const Matrix& A) { return (A - A.adjoint()) / Complex(0.0, 2.0); }

DerivativePair derivatives(const ParameterFamily& family, double t, double h) {
  if (!(h > 0.0)) throw InputError("derivatives: step must be positive");
  Matrix Ap = family_matrix(family, t + h);
  Matrix Am = family_matrix(family, t - h);
  DerivativePair out;
  out.t = t;
  out.step = h;
  Matrix dH = (hermitian_part(Ap) - hermitian_part(Am)) / (2.0 * h);
  Matrix dK = (skew_part(Ap) - skew_part(Am)) / (2.0 * h);
  out.dH = hermitian_part(dH);
  out.dK = hermitian_part(dK);
  auto cp = numerics::cholesky(hermitian_part(Ap), 0.0);
  auto cm = numerics::cholesky(hermitian_part(Am), 0.0);
  if (cp.ok && cm.ok) {
    Matrix dR = (numerics::hermitian_sqrt(hermitian_part(Ap)) -
                 numerics::hermitian_sqrt(hermitian_part(Am))) /
                (2.0 * h);
    out.dR = hermitian_part(dR);
  }
  return out;
}

static char sign_char(Definiteness d) {
  switch (d) {
    case Definiteness::Positive: return '+';
    case Definiteness::Negative: return '-';
    default: return '~';
  }
}

static std::string make_label(char x, char y, char side_letter, char side_sign) {
  std::string s = "I";
  s += x;
  s += y;
  s += '&';
  s += side_letter;
  s += side_sign;
  return s;
}

PointClassification classify_matrix_point(const ParameterFamily& family, double t, double h) {
  if (family.kind != FamilyKind::Matrix)
    throw FamilyError(family.name + ": matrix-family required");
  Matrix A = family_matrix(family, t);
  require_dissipative(family, A, t);
  auto derivs = derivatives(family, t, h);
  PointClassification pc;
  pc.t = t;
  pc.x_sign = sign_char(numerics::definiteness(derivs.dH));
  pc.y_sign = sign_char(numerics::definiteness(derivs.dK));
  pc.side_letter = 'H';
  pc.side_sign = sign_char(numerics::definiteness(hermitian_part(A)));
  pc.label = make_label(pc.x_sign, pc.y_sign, pc.side_letter, pc.side_sign);
  const char x = pc.x_sign, y = pc.y_sign, s = pc.side_sign;
  if ((x == '+' && y == '+' && s == '-') || (x == '+' && y == '-' && s == '+'))
    pc.predicted = Motion::CounterClockwise;
  else if ((x == '-' && y == '-' && s == '-') || (x == '-' && y == '+' && s == '+'))
    pc.predicted = Motion::Clockwise;
  else
    pc.predicted = Motion::None;
  return pc;
}

static char consensus_sign(const std::vector<double>& v, double tol) {
  bool all_pos = true, all_neg = true, all_zero = true;
  for (double x : v) {
    if (!(x > tol)) all_pos = false;
    if (!(x < -tol)) all_neg = false;
    if (std::abs(x) > tol) all_zero = false;
  }
  if (all_zero) return '0';
  if (all_pos) return '+';
  if (all_neg) return '-';
  return '~';
}

PointClassification classify_beta_point(const ParameterFamily& family, double t, double h) {
  if (family.kind != FamilyKind::Schur)
    throw FamilyError(family.name + ": schur-family required");
  BetaSequence bp, bm, b0;
  try {
    b0 = eval_beta(family, t);
    bp = eval_beta(family, t + h);
    bm = eval_beta(family, t - h);
  } catch (const InputError& e) {
    throw FamilyError(family.name + ": zeta collides with the spectrum near t = " +
                      std::to_string(t) + " (" + e.what() + "); choose a different zeta");
  }
  const int m = b0.order();
  const Complex inv_sqrt = 1.0 / b0.zeta_sqrt;
  std::vector<double> x(m), y(m);
  double scale = 0.0;
  for (int j = 0; j < m; ++j) {
    Complex dp = inv_sqrt * bp.values[j];
    Complex dm = inv_sqrt * bm.values[j];
    x[j] = (dp.real() - dm.real()) / (2.0 * h);
    y[j] = (dp.imag() - dm.imag()) / (2.0 * h);
    scale = std::max({scale, std::abs(x[j]), std::abs(y[j])});
  }
  const double tol = 1e-9 * (1.0 + scale);
  PointClassification pc;
  pc.t = t;
  pc.x_sign = consensus_sign(x, tol);
  pc.y_sign = consensus_sign(y, tol);
  auto sys = tridiag::assemble_system(b0);
  pc.side_letter = 'K';
  pc.side_sign = sign_char(numerics::definiteness(sys.K));
  pc.label = make_label(pc.x_sign, pc.y_sign, pc.side_letter, pc.side_sign);
  const char x_s = pc.x_sign, y_s = pc.y_sign, k_s = pc.side_sign;
  if (x_s == '0') {
    // H does not depend on t
    if (y_s == '+') pc.predicted = Motion::CounterClockwise;
    else if (y_s == '-') pc.predicted = Motion::Clockwise;
  } else if (y_s == '0') {
    // K does not depend on t
    if (x_s == '+' && k_s == '+') pc.predicted = Motion::CounterClockwise;
    else if (x_s == '-' && k_s == '-') pc.predicted = Motion::Clockwise;
  } else if ((x_s == '+' && y_s == '+' && k_s == '+') || (x_s == '-' && y_s == '+' && k_s == '-')) {
    pc.predicted = Motion::CounterClockwise;
  } else if ((x_s == '-' && y_s == '-' && k_s == '+') || (x_s == '+' && y_s == '-' && k_s == '-')) {
    pc.predicted = Motion::Clockwise;
  }
  return pc;
}

PointClassification classify_point(const ParameterFamily& family, double t, double h) {
  return family.kind == FamilyKind::Schur ? classify_beta_point(family, t, h)
                                          : classify_matrix_point(family, t, h);
}

double motion_certificate(const DissipativeSystem& system, const DerivativePair& derivs,
                          Complex eta) {
  if (derivs.dR.size() == 0)
    throw NumericsFault("motion_certificate: H near-singular along the family, no dR available");
  Matrix R = numerics::hermitian_sqrt(system.H);
  Matrix Rinv = numerics::hermitian_power(system.H, -0.5);
  Matrix L = derivs.dR * Rinv * system.K;
  Matrix form = derivs.dK - (L + L.adjoint());
  auto p = tridiag::p_polynomials(system.beta, eta);
  const int m = system.beta.order();
  Vector pv(m);
  for (int j = 0; j < m; ++j) pv(j) = p[j];
  return (pv.adjoint() * form * pv)(0, 0).real();
}

Definiteness lyapunov_sufficient(const DerivativePair& derivs, const DissipativeSystem& system) {
  if (derivs.dR.size() == 0)
    throw NumericsFault("lyapunov_sufficient: no dR available");
  Matrix Rinv = numerics::hermitian_power(system.H, -0.5);
  Matrix L = derivs.dR * Rinv * system.K;
  return numerics::definiteness((L + L.adjoint()) - derivs.dK);
}

double derivative_identity_residual(const ParameterFamily& family, double t, int eta_id,
                                    double h) {
  if (family.kind != FamilyKind::Schur)
    throw FamilyError(family.name + ": schur-family required");
  auto sys = family_system(family, t);
  auto angles0 = family_angles(family, t);
  const int m = static_cast<int>(angles0.size());
  if (eta_id < 0 || eta_id >= m) throw InputError("derivative_identity_residual: bad eta id");
  double a0 = angles0[eta_id];
  Complex eta = std::polar(1.0, a0);

  double phi = arg_pos(std::conj(family.zeta) * eta);
  if (std::min(phi, kTwoPi - phi) < 1e-6)
    throw InputError("derivative_identity_residual: eta too close to zeta");

  // local tracking of this zero by nearest angle at t +- h
  auto nearest = [&](const std::vector<double>& angles) {
    double best = angles[0], bd = circ_dist(angles[0], a0);
    for (double a : angles) {
      double d = circ_dist(a, a0);
      if (d < bd) {
        bd = d;
        best = a;
      }
    }
    return best;
  };
  double ap = nearest(family_angles(family, t + h));
  double am = nearest(family_angles(family, t - h));
  double darg = (circ_delta(ap, a0) - circ_delta(am, a0)) / (2.0 * h);

  auto derivs = derivatives(family, t, h);
  double lhs = motion_certificate(sys, derivs, eta);
  auto p = tridiag::p_polynomials(sys.beta, eta);
  Vector pv(m);
  for (int j = 0; j < m; ++j) pv(j) = p[j];
  double hp = (pv.adjoint() * sys.H * pv)(0, 0).real();
  double rhs = hp / (std::cos(phi) - 1.0) * darg;
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-12});
}

// --- tracking ---------------------------------------------------------------

namespace {

struct TrackState {
  std::vector<double> wrapped;    // per id
  std::vector<double> unwrapped;  // per id
};

// Optimal bijection between the current per-id angles and a new sorted angle
// multiset. Continuous motion preserves the cyclic order, so the optimum is a
// cyclic shift of the sorted-against-sorted matching.
std::vector<int> circular_assignment(const std::vector<double>& cur,
                                     const std::vector<double>& next_sorted,
                                     double* max_disp) {
  const int m = static_cast<int>(cur.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return cur[a] < cur[b]; });
  double best_total = std::numeric_limits<double>::infinity();
  int best_shift = 0;
  for (int s = 0; s < m; ++s) {
    double total = 0.0;
    for (int k = 0; k < m; ++k) total += circ_dist(cur[order[k]], next_sorted[(k + s) % m]);
    if (total < best_total) {
      best_total = total;
      best_shift = s;
    }
  }
  std::vector<int> map(m);  // id -> index into next_sorted
  double md = 0.0;
  for (int k = 0; k < m; ++k) {
    map[order[k]] = (k + best_shift) % m;
    md = std::max(md, circ_dist(cur[order[k]], next_sorted[(k + best_shift) % m]));
  }
  if (max_disp) *max_disp = md;
  return map;
}

void apply_step(TrackState& st, const std::vector<double>& next_sorted,
                const std::vector<int>& map) {
  const int m = static_cast<int>(st.wrapped.size());
  for (int id = 0; id < m; ++id) {
    double nb = next_sorted[map[id]];
    st.unwrapped[id] += circ_delta(nb, st.wrapped[id]);
    st.wrapped[id] = nb;
  }
}

void advance(const ParameterFamily& family, TrackState& st, double t0, double t1, int depth) {
  auto next_sorted = family_angles(family, t1);
  if (next_sorted.size() != st.wrapped.size())
    throw TrackingFault(family.name + ": spectrum size changed along the path");
  double max_disp = 0.0;
  auto map = circular_assignment(st.wrapped, next_sorted, &max_disp);
  if (max_disp < kPi / 2.0) {
    apply_step(st, next_sorted, map);
    return;
  }
  if (depth >= 4 || family.exact_grid())
    throw TrackingFault(family.name + ": per-step angular displacement " +
                        std::to_string(max_disp) + " >= pi/2 between t = " +
                        std::to_string(t0) + " and " + std::to_string(t1) +
                        " after refinement; use a finer grid");
  double mid = (t0 + t1) / 2.0;
  advance(family, st, t0, mid, depth + 1);
  advance(family, st, mid, t1, depth + 1);
}

}  // namespace

EigenPath track_eigenangles(const ParameterFamily& family, const std::vector<double>& grid) {
  if (grid.size() < 1) throw InputError("track_eigenangles: empty grid");
  for (size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1])) throw InputError("track_eigenangles: grid not increasing");

  // grid evaluations are independent; fan out, then fold sequentially
  std::vector<std::vector<double>> spectra = parallel_map<std::vector<double>>(
      grid.size(), [&](std::size_t k) { return family_angles(family, grid[k]); });

  const int m = static_cast<int>(spectra[0].size());
  EigenPath path;
  path.grid = grid;
  path.wrapped.assign(m, std::vector<double>(grid.size()));
  path.unwrapped.assign(m, std::vector<double>(grid.size()));

  TrackState st;
  st.wrapped = spectra[0];
  st.unwrapped = spectra[0];
  for (int id = 0; id < m; ++id) {
    path.wrapped[id][0] = st.wrapped[id];
    path.unwrapped[id][0] = st.unwrapped[id];
  }
  for (size_t k = 1; k < grid.size(); ++k) {
    if (static_cast<int>(spectra[k].size()) != m)
      throw TrackingFault(family.name + ": spectrum size changed along the path");
    double max_disp = 0.0;
    auto map = circular_assignment(st.wrapped, spectra[k], &max_disp);
    if (max_disp < kPi / 2.0) {
      apply_step(st, spectra[k], map);
    } else {
      advance(family, st, grid[k - 1], grid[k], 0);
    }
    for (int id = 0; id < m; ++id) {
      path.wrapped[id][k] = st.wrapped[id];
      path.unwrapped[id][k] = st.unwrapped[id];
    }
  }
  return path;
}

// --- interval scan ----------------------------------------------------------

static Motion observed_motion(const EigenPath& path, size_t k_lo, size_t k_hi) {
  if (k_hi <= k_lo) return Motion::None;
  bool all_up = true, all_down = true;
  for (const auto& row : path.unwrapped) {
    for (size_t k = k_lo; k < k_hi; ++k) {
      double d = row[k + 1] - row[k];
      if (!(d > 1e-9)) all_up = false;
      if (!(d < -1e-9)) all_down = false;
    }
  }
  if (all_up) return Motion::CounterClockwise;
  if (all_down) return Motion::Clockwise;
  return Motion::None;
}

ClassificationReport scan_intervals(const ParameterFamily& family_in,
                                    const std::vector<double>& grid) {
  if (grid.empty()) throw InputError("scan_intervals: empty grid");
  ParameterFamily family = family_in;
  ClassificationReport rep;
  ensure_zeta(family, grid, &rep.notes);
  rep.grid = grid;
  rep.zeta_used = family.zeta;

  rep.points = parallel_map<PointClassification>(grid.size(), [&](std::size_t k) {
    double t = grid[k];
    try {
      return classify_point(family, t, default_step(t));
    } catch (const FamilyError&) {
      PointClassification pc;
      pc.t = t;
      pc.label = "n/a";
      return pc;
    }
  });
  rep.path = track_eigenangles(family, grid);

  // runs are keyed on the predicted motion; the auxiliary sign labels may
  // drift within a run without changing the prediction
  auto refine = [&](double t_lo, double t_hi, Motion lo_motion) {
    if (family.exact_grid()) return (t_lo + t_hi) / 2.0;
    while (t_hi - t_lo > 1e-6) {
      double mid = (t_lo + t_hi) / 2.0;
      Motion m = Motion::None;
      try {
        m = classify_point(family, mid, default_step(mid)).predicted;
      } catch (const FamilyError&) {
      }
      if (m == lo_motion) t_lo = mid;
      else t_hi = mid;
    }
    return (t_lo + t_hi) / 2.0;
  };

  size_t run_start = 0;
  for (size_t k = 1; k <= grid.size(); ++k) {
    if (k < grid.size() && rep.points[k].predicted == rep.points[run_start].predicted) continue;
    ClassifiedInterval iv;
    iv.label = rep.points[run_start].label;
    for (size_t j = run_start + 1; j < k; ++j)
      if (rep.points[j].label != iv.label) {
        iv.label = "mixed";
        break;
      }
    iv.predicted = rep.points[run_start].predicted;
    iv.t_lo = (run_start == 0) ? grid.front()
                               : refine(grid[run_start - 1], grid[run_start],
                                        rep.points[run_start - 1].predicted);
    iv.t_hi = (k == grid.size()) ? grid.back()
                                 : refine(grid[k - 1], grid[k], rep.points[k - 1].predicted);
    iv.observed = observed_motion(rep.path, run_start, k - 1);
    iv.agree = iv.predicted == Motion::None || iv.predicted == iv.observed;
    rep.intervals.push_back(iv);
    run_start = k;
  }
  return rep;
}

}  // namespace popuc::monotone
