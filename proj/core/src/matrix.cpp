#include "rigidline/matrix.hpp"

#include "rigidline/error.hpp"

namespace rigidline {

MatrixR::MatrixR(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw Error(Errc::ShapeMismatch, "ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

MatrixR MatrixR::identity(int n) {
  MatrixR m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixR MatrixR::from_rows(const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  MatrixR m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error(Errc::ShapeMismatch, "ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec MatrixR::row(int r) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec MatrixR::col(int c) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

MatrixR MatrixR::transposed() const {
  MatrixR t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

MatrixR MatrixR::operator*(const MatrixR& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::ShapeMismatch, "matrix product shapes");
  MatrixR out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

MatrixR MatrixR::operator+(const MatrixR& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::ShapeMismatch, "matrix sum shapes");
  MatrixR out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

MatrixR MatrixR::operator-(const MatrixR& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::ShapeMismatch, "matrix difference shapes");
  MatrixR out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

Vec MatrixR::operator*(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error(Errc::ShapeMismatch, "matrix-vector shapes");
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

bool MatrixR::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool MatrixR::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RrefResult rref(MatrixR m) {
  RrefResult out;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rational pv = m.at(r, c);
    for (int j = c; j < cols; ++j) m.at(r, j) /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rational f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

KernelResult rref_kernel(const MatrixR& m) {
  KernelResult out;
  int cols = m.cols();
  RrefResult rr = rref(m);
  out.rank = rr.rank;
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (int r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.reduced.at(r, f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

int rank_of(const MatrixR& m) { return rref(m).rank; }

std::optional<Vec> solve(const MatrixR& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(Errc::ShapeMismatch, "solve rhs size");
  MatrixR aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult rr = rref(std::move(aug));
  for (int c : rr.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
  Vec x(a.cols(), Rational(0));
  for (int r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = rr.reduced.at(r, a.cols());
  return x;
}

Rational determinant(MatrixR m) {
  if (m.rows() != m.cols()) throw Error(Errc::ShapeMismatch, "determinant of non-square");
  int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    Rational pv = m.at(c, c);
    det *= pv;
    for (int i = c + 1; i < n; ++i) {
      Rational f = m.at(i, c) / pv;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "dot sizes");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec scaled(const Vec& v, const Rational& s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "vector sum sizes");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "vector difference sizes");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors) {
  std::vector<Vec> basis;
  for (const Vec& v : vectors) {
    Vec w = v;
    for (const Vec& b : basis) {
      Rational coeff = dot(w, b) / dot(b, b);
      if (coeff != 0) w = vec_sub(w, scaled(b, coeff));
    }
    if (!is_zero_vec(w)) basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace rigidline
