#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace popuc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Bad user input: malformed files, invariant violations in supplied data.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A family could not be evaluated at a requested point.
struct FamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvalue path tracking could not resolve a consistent assignment.
struct TrackingFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal numerical failure: iteration caps, residuals out of contract.
struct NumericsFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument normalized to (0, 2pi]; arg(1) = 2pi.
inline double arg_pos(Complex z) {
  double a = std::arg(z);
  return a <= 0.0 ? a + kTwoPi : a;
}

// Signed circular difference a - b reduced to (-pi, pi].
inline double circ_delta(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  if (d > kPi) d -= kTwoPi;
  return d;
}

inline double circ_dist(double a, double b) { return std::abs(circ_delta(a, b)); }

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace popuc
