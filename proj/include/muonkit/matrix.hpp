#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace muonkit {

/// Dense 2-D matrix of doubles, row-major. The universal value type for
/// parameters, gradients and optimizer buffers.
class Matrix {
 public:
  Matrix() = default;

  /// Zero matrix of the given shape. Throws std::invalid_argument on
  /// non-positive dimensions.
  Matrix(int rows, int cols);

  /// Takes ownership of row-major data; data.size() must equal rows*cols.
  Matrix(int rows, int cols, std::vector<double> data);

  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  /// "3x4" style shape string for diagnostics.
  std::string shape_str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Standard matrix product. Throws on inner-dimension mismatch, naming both
/// shapes.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

/// sqrt of the sum of squared entries.
double frobenius_norm(const Matrix& a);

/// frobenius_norm(a) / sqrt(rows*cols).
double rms(const Matrix& a);

bool all_finite(const Matrix& a);

/// Throws std::invalid_argument when any entry is NaN/Inf; `what` names the
/// offending value in the message.
void require_finite(const Matrix& a, const char* what);

}  // namespace muonkit
