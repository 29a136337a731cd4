#pragma once

#include <optional>
#include <vector>

#include "rigidline/matrix.hpp"

namespace rigidline {

/// Witness that a symmetric matrix is not PSD: a principal index set whose
/// minor has negative determinant. Either a diagonal entry that went negative
/// during elimination (pivots so far + that index) or a 2x2 block with zero
/// diagonal and a nonzero off-diagonal entry. `recheck_witness` re-evaluates
/// the minor from the original matrix, independent of the elimination.
struct PsdViolation {
  enum class Kind { NegativeDiagonal, Indefinite2x2 };
  Kind kind;
  std::vector<int> indices;  // principal index set, 0-based
};

/// Outcome of symmetric Gaussian elimination with positive diagonal pivoting.
/// For a PSD verdict the elimination is recorded completely: permutation-free
/// lower factor columns plus pivots, so S = L D L^T can be rebuilt exactly.
struct PsdCertificate {
  bool psd = false;
  int rank = 0;
  std::vector<std::pair<int, Rational>> pivots;  // (index, pivot value), in order
  MatrixR lower;  // n x k lower-factor columns, unit at the pivot row
  std::optional<PsdViolation> violation;

  /// Exact reconstruction L D L^T of a PSD input.
  MatrixR reconstruct(int n) const;
};

/// Decides PSD-ness and exact rank of a symmetric rational matrix.
/// Pivot choice: largest diagonal entry, ties broken by lowest index.
/// Throws NotSymmetric for non-symmetric input.
PsdCertificate psd_rank(const MatrixR& s);

/// Recomputes the violation's principal minor determinant from `s` and checks
/// it is negative. Returns the determinant.
Rational recheck_witness(const MatrixR& s, const PsdViolation& violation);

}  // namespace rigidline
