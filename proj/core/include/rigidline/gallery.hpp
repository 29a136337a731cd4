#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "rigidline/certificates.hpp"
#include "rigidline/flex.hpp"
#include "rigidline/stress.hpp"

namespace rigidline {

/// A named construction: framework, optional distinguished stress, and the
/// parameters/seed that produced it.
struct GalleryItem {
  std::string name;
  Framework framework;
  std::optional<Stress> stress;
  nlohmann::ordered_json provenance;
};

/// Cycle on the line with p_1 < ... < p_n, edges {i,i+1} and {1,n}. The
/// distinguished stress solves the vertex equilibrium recursion along the
/// chain, scaled to the smallest integer vector with positive chain entries
/// and negative closing entry.
GalleryItem stretched_cycle(const Vec& positions);

/// Even cycle realized with alternating low/high positions plus seeded
/// rational jitter. Not certifiable; the flex machinery finds a planar
/// alternate realization.
GalleryItem alternating_cycle(int n, std::uint64_t seed);

/// Triangles {1,2,3}, {4,5,6}; rungs {1,4}, {2,5}, {3,6}.
Graph prism_graph();

/// Planar prism with the three rung lines concurrent: rung k runs along
/// apex + t * direction[k], triangle-A endpoint at extent .first, triangle-B
/// endpoint at .second.
struct ConcurrentRungParams {
  Point apex;
  std::array<Vec, 3> directions;
  std::array<std::pair<Rational, Rational>, 3> extents;
};

/// Builds the framework from explicit parameters; the concurrency forces a
/// one-dimensional stress space, and the distinguished stress is the canonical
/// basis vector signed so the stress on {1,2} is positive.
GalleryItem prism_desargues_2d(const ConcurrentRungParams& params);

/// Seeded search over concurrent-rung placements until the configuration is
/// strictly convex along the cycle 1-2-5-4-6-3 and certifies super stable
/// (PSD rank 3). Trial 0 is the canonical instance.
GalleryItem prism_desargues_2d(std::uint64_t seed);

struct PrismLineUrResult {
  GalleryItem item;             // perturbed, certified line framework
  Framework planar;             // certified concurrent-rung instance
  Stress planar_stress;         // its stress, equilibrium on the line as well
  Framework line_preperturb;    // exact orthogonal projection, 1-dimensional
  Stress flat_triangle_stress;  // PSD rank-1 stress of flat triangle {1,2,3}
  Stress sum_stress;            // flat + planar; PSD rank 4 on the line
  SuperStabilityCertificate certificate;  // for the perturbed framework
  std::vector<int> order;       // sorted vertex order (rank -> vertex)
};

/// The universally rigid line prism: project a certified planar instance onto
/// a seeded rational line, add the flat-triangle stress to reach PSD rank
/// n-1-1 = 4, perturb, and re-certify.
PrismLineUrResult prism_line_ur(std::uint64_t seed);

struct PrismLineFlexibleResult {
  GalleryItem item;          // line framework, same sorted vertex order
  PlanarConfig witness;      // equivalent, noncongruent planar realization
  Edge removed;
  double theta = 0.0;
  BranchFlags flags;
  double max_edge_residual = 0.0;
  double max_pair_dist_diff = 0.0;
  std::vector<int> order;
};

/// Searches line configurations near the integer positions 1..6 in the given
/// vertex order (endpoints pinned, interior jittered by <= 1/4) until a planar
/// alternate realization exists.
PrismLineFlexibleResult prism_line_flexible(const std::vector<int>& order,
                                            std::uint64_t seed);

struct OrchardLadderResult {
  GalleryItem item;         // planar ladder, certified super stable
  Framework projection;     // x-axis projection (1-dimensional)
  SuperStabilityCertificate certificate;
  LiftCertificate lift;     // projection certified through the planar lift
};

/// Prism-graph ladder whose three rung lines meet at a finite point; super
/// stable in the plane, and its x-axis projection is certified by the lift.
OrchardLadderResult orchard_ladder(const ConcurrentRungParams& params);
OrchardLadderResult orchard_ladder(std::uint64_t seed);

/// Adds seeded rationals with denominator 10^6 and |value| <= magnitude to
/// every coordinate. On the line the vertex order is preserved; magnitude
/// must stay below half the minimum gap (OrderViolation otherwise).
Framework perturb(const Framework& f, const Rational& magnitude, std::uint64_t seed);

/// CLI entry: stretched-cycle, alternating-cycle, prism-2d, prism-line-ur,
/// prism-line-flex, orchard-ladder.
bool is_gallery_name(const std::string& name);

}  // namespace rigidline
