#include "rigidline/floatmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rigidline/error.hpp"

namespace rigidline {

FloatMat FloatMat::identity(int n) {
  FloatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

FloatMat FloatMat::from(const MatrixR& m) {
  FloatMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = to_double(m.at(i, j));
  return out;
}

FloatMat FloatMat::transposed() const {
  FloatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FloatMat FloatMat::operator*(const FloatMat& rhs) const {
  FloatMat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      double aik = at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

double FloatMat::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool FloatMat::all_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](double x) { return std::isfinite(x); });
}

namespace {

/// Orthogonalize the columns of `b` in place by one-sided Jacobi rotations,
/// accumulating the rotations into `v` (n x n). On exit the columns of b are
/// pairwise orthogonal and b = a_original * v.
void one_sided_jacobi(FloatMat& b, FloatMat& v) {
  const int n = b.cols();
  const int m = b.rows();
  const double eps = 1e-30;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0, aqq = 0, apq = 0;
        for (int i = 0; i < m; ++i) {
          app += b.at(i, p) * b.at(i, p);
          aqq += b.at(i, q) * b.at(i, q);
          apq += b.at(i, p) * b.at(i, q);
        }
        if (apq * apq <= eps * app * aqq) continue;
        rotated = true;
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        for (int i = 0; i < m; ++i) {
          double bp = b.at(i, p), bq = b.at(i, q);
          b.at(i, p) = c * bp - s * bq;
          b.at(i, q) = s * bp + c * bq;
        }
        for (int i = 0; i < n; ++i) {
          double vp = v.at(i, p), vq = v.at(i, q);
          v.at(i, p) = c * vp - s * vq;
          v.at(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
}

std::vector<double> column_norms(const FloatMat& b) {
  std::vector<double> s(b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    double acc = 0;
    for (int i = 0; i < b.rows(); ++i) acc += b.at(i, j) * b.at(i, j);
    s[j] = std::sqrt(acc);
  }
  return s;
}

}  // namespace

SvdResult svd_factor(const FloatMat& a) {
  if (!a.all_finite()) throw Error(Errc::NonFinite, "svd_factor input");
  if (a.rows() != a.cols()) throw Error(Errc::ShapeMismatch, "svd_factor expects square input");
  const int n = a.rows();
  FloatMat b = a;
  FloatMat vr = FloatMat::identity(n);
  one_sided_jacobi(b, vr);
  std::vector<double> sig = column_norms(b);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sig[x] > sig[y]; });

  SvdResult out;
  out.u = FloatMat(n, n);
  out.v = FloatMat(n, n);
  out.sigma.resize(n);
  double smax = sig.empty() ? 0.0 : sig[order[0]];
  double tiny = std::max(1e-300, smax * 1e-14 * n);

  // U columns: normalized images; zero singular directions are filled in by
  // Gram-Schmidt against the standard basis afterwards.
  std::vector<bool> filled(n, false);
  for (int k = 0; k < n; ++k) {
    int j = order[k];
    out.sigma[k] = sig[j];
    for (int i = 0; i < n; ++i) out.v.at(k, i) = vr.at(i, j);  // V = (right factor)^T
    if (sig[j] > tiny) {
      for (int i = 0; i < n; ++i) out.u.at(i, k) = b.at(i, j) / sig[j];
      filled[k] = true;
    }
  }
  for (int k = 0; k < n; ++k) {
    if (filled[k]) continue;
    out.sigma[k] = 0.0;
    // pick the standard basis vector least represented so far
    for (int cand = 0; cand < n; ++cand) {
      std::vector<double> w(n, 0.0);
      w[cand] = 1.0;
      for (int c = 0; c < n; ++c) {
        if (c == k || !(filled[c] || c < k)) continue;
        double proj = 0;
        for (int i = 0; i < n; ++i) proj += w[i] * out.u.at(i, c);
        for (int i = 0; i < n; ++i) w[i] -= proj * out.u.at(i, c);
      }
      double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
      if (norm > 1e-6) {
        for (int i = 0; i < n; ++i) out.u.at(i, k) = w[i] / norm;
        filled[k] = true;
        break;
      }
    }
  }
  return out;
}

std::vector<double> singular_values(const FloatMat& m) {
  if (!m.all_finite()) throw Error(Errc::NonFinite, "singular_values input");
  FloatMat b = (m.rows() >= m.cols()) ? m : m.transposed();
  FloatMat v = FloatMat::identity(b.cols());
  one_sided_jacobi(b, v);
  std::vector<double> s = column_norms(b);
  std::sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

int float_rank(const FloatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<double> s = singular_values(m);
  if (s.empty() || s[0] == 0.0) return 0;
  double tol = 1e-9 * s[0] * std::max(m.rows(), m.cols());
  int r = 0;
  for (double x : s)
    if (x > tol) ++r;
  return r;
}

std::vector<double> symmetric_eigenvalues(FloatMat s) {
  const int n = s.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += s.at(p, q) * s.at(p, q);
    if (off < 1e-28) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = s.at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double tau = (s.at(q, q) - s.at(p, p)) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double sn = c * t;
        for (int i = 0; i < n; ++i) {
          double sip = s.at(i, p), siq = s.at(i, q);
          s.at(i, p) = c * sip - sn * siq;
          s.at(i, q) = sn * sip + c * siq;
        }
        for (int i = 0; i < n; ++i) {
          double spi = s.at(p, i), sqi = s.at(q, i);
          s.at(p, i) = c * spi - sn * sqi;
          s.at(q, i) = sn * spi + c * sqi;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = s.at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace rigidline
