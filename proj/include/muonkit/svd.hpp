#pragma once

#include <vector>

#include "muonkit/matrix.hpp"

namespace muonkit {

/// Thin SVD m = U diag(s) V^T with r = min(rows, cols) columns in U and V and
/// s sorted descending.
struct SvdResult {
  Matrix u;
  std::vector<double> s;
  Matrix v;
};

/// Exact (to round-off) thin SVD by one-sided Jacobi rotations. Verification
/// oracle only; never called on the training path. Throws std::runtime_error
/// if the rotation sweeps fail to converge within max_sweeps.
///
/// Zero singular directions get identity-pattern columns completed to an
/// orthonormal basis, so U^T U = V^T V = I holds even for the zero matrix.
SvdResult svd_oracle(const Matrix& m, int max_sweeps = 60);

/// Polar factor U V^T from svd_oracle. Requires full rank: throws
/// std::invalid_argument when the smallest singular value is <= 1e-12,
/// where the polar factor stops being unique.
Matrix polar_oracle(const Matrix& m);

}  // namespace muonkit
