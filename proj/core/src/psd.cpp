#include "rigidline/psd.hpp"

#include <algorithm>

#include "rigidline/error.hpp"

namespace rigidline {

MatrixR PsdCertificate::reconstruct(int n) const {
  // S = L D L^T with the recorded pivot order.
  int k = static_cast<int>(pivots.size());
  MatrixR out(n, n);
  for (int s = 0; s < k; ++s) {
    const Rational& d = pivots[s].second;
    for (int i = 0; i < n; ++i) {
      const Rational& li = lower.at(i, s);
      if (li == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += li * d * lower.at(j, s);
    }
  }
  return out;
}

PsdCertificate psd_rank(const MatrixR& s) {
  if (!s.is_symmetric()) throw Error(Errc::NotSymmetric, "psd_rank needs a symmetric matrix");
  int n = s.rows();
  MatrixR work = s;
  PsdCertificate cert;
  cert.lower = MatrixR(n, n);
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  std::vector<int> pivot_set;

  while (!active.empty()) {
    // Any negative diagonal entry in the Schur complement certifies NotPSD:
    // the principal minor on (pivots so far + that index) has negative
    // determinant in the original matrix.
    for (int i : active) {
      if (work.at(i, i) < 0) {
        PsdViolation v;
        v.kind = PsdViolation::Kind::NegativeDiagonal;
        v.indices = pivot_set;
        v.indices.push_back(i);
        cert.violation = v;
        return cert;
      }
    }
    int best = -1;
    for (int i : active) {
      if (best < 0 || work.at(i, i) > work.at(best, best)) best = i;
    }
    if (work.at(best, best) == 0) {
      // All remaining diagonal entries are zero. Any nonzero off-diagonal
      // entry gives a 2x2 principal block with determinant -s_ij^2 < 0.
      for (std::size_t a = 0; a < active.size(); ++a) {
        for (std::size_t b = a + 1; b < active.size(); ++b) {
          int i = active[a], j = active[b];
          if (work.at(i, j) != 0) {
            PsdViolation v;
            v.kind = PsdViolation::Kind::Indefinite2x2;
            v.indices = pivot_set;
            v.indices.push_back(i);
            v.indices.push_back(j);
            cert.violation = v;
            return cert;
          }
        }
      }
      break;  // remaining block is zero
    }
    int p = best;
    Rational pv = work.at(p, p);
    int step = static_cast<int>(cert.pivots.size());
    cert.pivots.emplace_back(p, pv);
    pivot_set.push_back(p);
    active.erase(std::find(active.begin(), active.end(), p));
    cert.lower.at(p, step) = 1;
    Vec prow(n);
    for (int j : active) prow[j] = work.at(p, j);
    for (int i : active) {
      Rational f = prow[i] / pv;
      cert.lower.at(i, step) = f;
      if (f != 0)
        for (int j : active) work.at(i, j) -= f * prow[j];
      work.at(i, p) = 0;
      work.at(p, i) = 0;
    }
  }
  cert.psd = true;
  cert.rank = static_cast<int>(cert.pivots.size());
  return cert;
}

Rational recheck_witness(const MatrixR& s, const PsdViolation& violation) {
  int k = static_cast<int>(violation.indices.size());
  MatrixR minor(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      minor.at(i, j) = s.at(violation.indices[i], violation.indices[j]);
  Rational det = determinant(minor);
  if (det >= 0)
    throw InternalInconsistency("PSD violation witness has nonnegative determinant");
  return det;
}

}  // namespace rigidline
