#pragma once

#include <vector>

#include "rigidline/matrix.hpp"

namespace rigidline {

/// Small dense double matrix for the few places exactness is not required
/// (SVD factorization, float rank, flex tracing support).
class FloatMat {
 public:
  FloatMat() : rows_(0), cols_(0) {}
  FloatMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static FloatMat identity(int n);
  static FloatMat from(const MatrixR& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  FloatMat transposed() const;
  FloatMat operator*(const FloatMat& rhs) const;
  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_, cols_;
  std::vector<double> a_;
};

struct SvdResult {
  FloatMat u;                    // orthogonal
  std::vector<double> sigma;     // nonincreasing, nonnegative
  FloatMat v;                    // orthogonal; A = U * diag(sigma) * V
};

/// One-sided Jacobi SVD of a square matrix: A = U * D * V with U, V orthogonal
/// and D = diag(sigma) nonincreasing. Accurate to ~1e-14 relative for the
/// small matrices this library handles. Throws NonFinite on NaN/Inf input.
SvdResult svd_factor(const FloatMat& a);

/// Singular values of an arbitrary rectangular matrix, nonincreasing.
std::vector<double> singular_values(const FloatMat& m);

/// Number of singular values above 1e-9 * sigma_max * max(rows, cols).
int float_rank(const FloatMat& m);

/// Symmetric Jacobi eigenvalues (ascending). Test oracle quality; independent
/// of the exact PSD elimination path.
std::vector<double> symmetric_eigenvalues(FloatMat s);

}  // namespace rigidline
