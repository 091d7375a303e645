#include "muonkit/newton_schulz.hpp"

#include <stdexcept>
#include <utility>

namespace muonkit {

namespace {
constexpr double kNormEps = 1e-7;
}

void NsCoefficients::validate() const {
  if (kind == Kind::Cubic && c != 0.0) {
    throw std::invalid_argument("cubic Newton-Schulz takes exactly two coefficients");
  }
  const double g = gain_at_one();
  if (g < 0.5 || g > 1.5) {
    throw std::invalid_argument("Newton-Schulz coefficients have f(1) = " +
                                std::to_string(g) + ", outside the sanity band [0.5, 1.5]");
  }
}

Matrix newton_schulz(const Matrix& m, int steps, const NsCoefficients& coeffs) {
  coeffs.validate();
  if (steps <= 0) {
    throw std::invalid_argument("Newton-Schulz step count must be positive");
  }
  const double norm = frobenius_norm(m);
  if (norm == 0.0) {
    throw std::invalid_argument("Newton-Schulz input is the zero matrix");
  }

  // Iterate in the wide orientation (rows <= cols) so the Gram matrix below
  // is min(n,m) square; transpose equivariance makes this exact up to
  // round-off.
  const bool tall = m.rows() > m.cols();
  Matrix x = tall ? transpose(m) : m;

  const double scale = 1.0 / (norm + kNormEps);
  for (double& v : x.data()) v *= scale;

  for (int step = 0; step < steps; ++step) {
    const Matrix gram = matmul(x, transpose(x));  // X X^T, (r x r)
    if (coeffs.kind == NsCoefficients::Kind::Cubic) {
      // X <- a*X + b*(X X^T)X, algebraically X(a + b X^T X).
      Matrix gx = matmul(gram, x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        x.data()[i] = coeffs.a * x.data()[i] + coeffs.b * gx.data()[i];
      }
    } else {
      // X <- a*X + (b*A + c*A^2)X with A = X X^T.
      Matrix poly = matmul(gram, gram);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        poly.data()[i] = coeffs.b * gram.data()[i] + coeffs.c * poly.data()[i];
      }
      Matrix px = matmul(poly, x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        x.data()[i] = coeffs.a * x.data()[i] + px.data()[i];
      }
    }
  }

  return tall ? transpose(x) : std::move(x);
}

}  // namespace muonkit
