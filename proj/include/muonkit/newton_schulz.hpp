#pragma once

#include "muonkit/matrix.hpp"

namespace muonkit {

/// Polynomial coefficient set for the Newton-Schulz iteration.
///
/// Cubic f(x) = 1.5x - 0.5x^3 converges to the exact polar factor and backs
/// the tight oracle comparisons. Quintic f(x) = ax + bx^3 + cx^5 with the
/// de-facto production constants (3.4445, -4.7750, 2.0315) inflates small
/// singular values much faster at the cost of a looser limit band; it is the
/// runtime default at five steps.
struct NsCoefficients {
  enum class Kind { Cubic, Quintic };

  Kind kind = Kind::Quintic;
  double a = 3.4445;
  double b = -4.7750;
  double c = 2.0315;

  static NsCoefficients cubic() { return {Kind::Cubic, 1.5, -0.5, 0.0}; }
  static NsCoefficients quintic() { return {Kind::Quintic, 3.4445, -4.7750, 2.0315}; }

  /// f(1) = a + b + c; the iteration's behaviour at unit singular values.
  double gain_at_one() const { return kind == Kind::Cubic ? a + b : a + b + c; }

  /// Throws std::invalid_argument unless f(1) lies in [0.5, 1.5]; a set
  /// outside the band explodes at unit singular values.
  void validate() const;
};

/// Approximate polar factor of a nonzero matrix: T steps of the Newton-Schulz
/// polynomial iteration on X0 = m / (||m||_F + 1e-7). Tall inputs are
/// iterated in the transposed (wide) orientation so the Gram matrix built
/// each step stays min(n,m) square. Throws on a zero input or invalid
/// coefficients.
Matrix newton_schulz(const Matrix& m, int steps, const NsCoefficients& coeffs);

}  // namespace muonkit
