#pragma once

#include <optional>
#include <vector>

#include "rigidline/certificates.hpp"
#include "rigidline/floatmat.hpp"
#include "rigidline/framework.hpp"

namespace rigidline {

/// Exact orthogonal split p_i = low_i + h_i with low_i in the target span and
/// h_i in its orthogonal complement, both in ambient coordinates, so the
/// squared-distance identity
///   |p_i - p_j|^2 = |low_i - low_j|^2 + |h_i - h_j|^2
/// holds exactly for every pair. When the span (or complement) admits an
/// exact rational orthonormal basis -- coordinate targets and Pythagorean
/// directions do -- reduced coordinates in the lower dimension are provided
/// as well, isometric to the ambient parts.
struct ProjectionSplit {
  Framework low;                // span components, ambient coordinates
  std::vector<Point> heights;   // complement components, ambient coordinates
  std::optional<Framework> low_reduced;
  std::optional<std::vector<Point>> heights_reduced;
};

/// Projection onto the span of the first k coordinate directions.
ProjectionSplit project_orthogonal(const Framework& f, int first_k);

/// Projection onto the span of rational direction vectors (orthogonalized
/// internally; square roots never taken). Throws DependentDirections when the
/// vectors are linearly dependent.
ProjectionSplit project_orthogonal(const Framework& f, const std::vector<Vec>& directions);

/// q_i = A p_i + b, exactly. The graph is unchanged.
Framework apply_affine(const Framework& f, const AffineMap& map);

struct AffineInvarianceVerdict {
  bool certified = false;
  std::string detail;
  int image_span = 0;
  Framework image;
  std::optional<LiftCertificate> lift;
};

/// Applies the map to a certified super-stable framework and re-certifies the
/// image through the lift test against the original framework and its stress.
/// Degenerate images (affine span 0) are reported, not thrown.
AffineInvarianceVerdict affine_invariance_demo(const Framework& f,
                                               const SuperStabilityCertificate& certificate,
                                               const AffineMap& map);

}  // namespace rigidline
