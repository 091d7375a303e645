#include "muonkit/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace muonkit {

namespace {

constexpr double kRotateTol = 1e-15;

// Orthogonalizes identity-pattern vectors against the already-filled columns
// of u to stand in for singular directions the data does not determine.
void complete_column(Matrix& u, const std::vector<bool>& filled, int col) {
  const int n = u.rows();
  const int r = u.cols();
  for (int seed = 0; seed < n; ++seed) {
    std::vector<double> cand(n, 0.0);
    cand[seed] = 1.0;
    for (int j = 0; j < r; ++j) {
      if (j == col || !filled[j]) continue;
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += cand[i] * u(i, j);
      for (int i = 0; i < n; ++i) cand[i] -= dot * u(i, j);
    }
    double norm = 0.0;
    for (double x : cand) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 1e-6) {
      for (int i = 0; i < n; ++i) u(i, col) = cand[i] / norm;
      return;
    }
  }
  throw std::runtime_error("svd_oracle: failed to complete orthonormal basis");
}

// One-sided Jacobi on a tall-or-square work matrix (rows >= cols). Rotates
// column pairs until all are mutually orthogonal, accumulating rotations
// in v.
SvdResult jacobi_svd_tall(const Matrix& a, int max_sweeps) {
  const int n = a.rows();
  const int r = a.cols();
  Matrix w = a;
  Matrix v = Matrix::identity(r);

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (int p = 0; p < r - 1; ++p) {
      for (int q = p + 1; q < r; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int i = 0; i < n; ++i) {
          app += w(i, p) * w(i, p);
          aqq += w(i, q) * w(i, q);
          apq += w(i, p) * w(i, q);
        }
        if (std::abs(apq) <= kRotateTol * std::sqrt(app * aqq)) continue;
        converged = false;

        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < n; ++i) {
          const double wp = w(i, p), wq = w(i, q);
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (int i = 0; i < r; ++i) {
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
  }
  if (!converged) {
    throw std::runtime_error("svd_oracle: Jacobi rotations did not converge within " +
                             std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<double> sigma(r, 0.0);
  Matrix u(n, r);
  std::vector<bool> filled(r, false);
  for (int j = 0; j < r; ++j) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += w(i, j) * w(i, j);
    norm = std::sqrt(norm);
    sigma[j] = norm;
    if (norm > 0.0) {
      for (int i = 0; i < n; ++i) u(i, j) = w(i, j) / norm;
      filled[j] = true;
    }
  }

  // Sort singular values descending and permute columns to match.
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sigma[x] > sigma[y]; });

  SvdResult out{Matrix(n, r), std::vector<double>(r), Matrix(r, r)};
  std::vector<bool> filled_sorted(r, false);
  for (int j = 0; j < r; ++j) {
    const int src = order[j];
    out.s[j] = sigma[src];
    filled_sorted[j] = filled[src];
    for (int i = 0; i < n; ++i) out.u(i, j) = u(i, src);
    for (int i = 0; i < r; ++i) out.v(i, j) = v(i, src);
  }
  for (int j = 0; j < r; ++j) {
    if (!filled_sorted[j]) {
      complete_column(out.u, filled_sorted, j);
      filled_sorted[j] = true;
    }
  }
  return out;
}

}  // namespace

SvdResult svd_oracle(const Matrix& m, int max_sweeps) {
  if (m.rows() >= m.cols()) {
    return jacobi_svd_tall(m, max_sweeps);
  }
  // Wide input: decompose the transpose and swap the factor roles.
  SvdResult t = jacobi_svd_tall(transpose(m), max_sweeps);
  return SvdResult{std::move(t.v), std::move(t.s), std::move(t.u)};
}

Matrix polar_oracle(const Matrix& m) {
  SvdResult svd = svd_oracle(m);
  const double smin = svd.s.empty() ? 0.0 : svd.s.back();
  if (smin <= 1e-12) {
    throw std::invalid_argument(
        "polar_oracle: matrix is rank-deficient (min singular value " +
        std::to_string(smin) + " <= 1e-12), polar factor is not unique");
  }
  return matmul(svd.u, transpose(svd.v));
}

}  // namespace muonkit
