#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "rigidline/rational.hpp"

namespace rigidline {

/// Dense exact-rational matrix, row major.
class MatrixR {
 public:
  MatrixR() : rows_(0), cols_(0) {}
  MatrixR(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  MatrixR(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixR identity(int n);
  static MatrixR from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec col(int c) const;

  MatrixR transposed() const;
  MatrixR operator*(const MatrixR& rhs) const;
  MatrixR operator+(const MatrixR& rhs) const;
  MatrixR operator-(const MatrixR& rhs) const;
  Vec operator*(const Vec& x) const;

  bool operator==(const MatrixR& rhs) const = default;
  bool is_zero() const;
  bool is_symmetric() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  MatrixR reduced;
  std::vector<int> pivot_cols;
  int rank = 0;
};

RrefResult rref(MatrixR m);

/// Exact rank plus the canonical kernel basis: one vector per free column in
/// increasing column order, the free coordinate normalized to 1. M*v = 0
/// exactly for every basis vector.
struct KernelResult {
  int rank = 0;
  std::vector<Vec> basis;
};

KernelResult rref_kernel(const MatrixR& m);

int rank_of(const MatrixR& m);

/// One particular solution of A x = b (free variables set to 0), or nullopt
/// when the system is inconsistent.
std::optional<Vec> solve(const MatrixR& a, const Vec& b);

Rational determinant(MatrixR m);

Rational dot(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rational& s);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

/// Gram-Schmidt without normalization; drops zero vectors. Output vectors are
/// pairwise orthogonal with rational entries and span the input's span.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors);

}  // namespace rigidline
