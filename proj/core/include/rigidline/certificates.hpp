#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rigidline/stress.hpp"

namespace rigidline {

/// q = A p + b. A may be rectangular or singular.
struct AffineMap {
  MatrixR a;  // D' x D
  Vec b;      // D'
};

enum class CertifyVerdict { Certified, CompleteSimplex, NotCertified };

enum class NotCertifiedReason {
  None,
  NoEquilibriumStress,
  SearchExhausted,
  ConicAtInfinity,
  CandidateFails,
};

const char* reason_name(NotCertifiedReason reason);

/// A Certified verdict is a proof of universal rigidity (PSD equilibrium
/// stress of rank n-d-1, no conic at infinity). NotCertified is NOT a
/// disproof; the search is one-sided.
struct SuperStabilityCertificate {
  CertifyVerdict verdict = CertifyVerdict::NotCertified;
  NotCertifiedReason reason = NotCertifiedReason::None;
  std::string detail;

  int span_dim = 0;        // d = affine span of the configuration
  int required_rank = 0;   // n - d - 1
  std::optional<Stress> stress;
  std::optional<PsdCertificate> psd;
  bool conic_free = false;  // no conic at infinity through the edge directions

  std::uint64_t seed = 0;
  std::string search_recipe;

  bool certified() const { return verdict == CertifyVerdict::Certified; }
};

/// Checks a candidate stress, or searches the equilibrium stress space:
/// signed basis vectors, pairwise sums and differences, then 1000 seeded
/// small-integer combinations. First PSD stress of rank n-d-1 wins.
/// Complete graphs on n <= d+1 vertices are universally rigid by congruence
/// and short-circuit to CompleteSimplex.
SuperStabilityCertificate certify_super_stable(const Framework& f,
                                               const std::optional<Stress>& candidate = std::nullopt,
                                               std::uint64_t seed = 0);

struct LiftCertificate {
  bool certified = false;
  std::string failed_check;  // empty when certified
  int high_span = 0;
  int required_rank = 0;
  std::optional<PsdCertificate> psd;
};

/// Universal rigidity of `low` via a higher-dimensional witness: w must be an
/// equilibrium stress for both frameworks, PSD of rank n - D - 1 where D is
/// the affine span of `high`, the high edge directions must avoid every conic,
/// and low's augmented matrix must annihilate the stress matrix. Then low is
/// an affine image of a super-stable framework.
LiftCertificate certify_by_lift(const Framework& low, const Framework& high,
                                const Stress& w);

struct ConvexPolygonReport {
  bool strictly_convex = false;
  bool hull_edges_present = false;
  bool boundary_positive = false;
  bool interior_negative = false;
  bool equilibrium = false;
  bool hypotheses_hold = false;
  bool conclusion_psd = false;
  int psd_rank_value = -1;
  std::vector<int> hull_cycle;  // 1-based vertex order around the hull
};

/// Planar convex-position criterion: if the configuration is strictly convex,
/// every hull edge is present, and the stress is positive on hull edges and
/// negative on the rest, the stress matrix must come out PSD of rank n-3.
/// A hypotheses-pass/conclusion-fail outcome throws InternalInconsistency.
ConvexPolygonReport check_convex_polygon_stress(const Framework& f, const Stress& w);

/// Exact solve for q_i = A p_i + b; nullopt when no affine map exists.
std::optional<AffineMap> check_affine_image(const Configuration& p,
                                            const Configuration& q);

}  // namespace rigidline
