#pragma once

#include <optional>
#include <vector>

#include "rigidline/framework.hpp"

namespace rigidline {

struct PlanarPoint {
  double x = 0.0, y = 0.0;
};
using PlanarConfig = std::vector<PlanarPoint>;

enum class CircleOutcome { Ok, NoIntersection, CoincidentCenters };

struct CircleResult {
  CircleOutcome outcome = CircleOutcome::NoIntersection;
  PlanarPoint point;
};

/// Intersection of circles (c1, r1^2), (c2, r2^2) on the requested branch
/// (sign of the cross product with c2 - c1). Tangency within 1e-12 relative
/// slack counts as a single intersection.
CircleResult circle_circle_intersect(PlanarPoint c1, double r1_sq, PlanarPoint c2,
                                     double r2_sq, bool branch);

struct BranchFlags {
  bool branch = true;        // circle intersection side
  bool sweep_positive = true;  // crank angle sign
};

/// One pose of the prism-minus-rung linkage: triangle {1,2,3} pinned at its
/// line positions, the free triangle carried by the two retained rungs (crank
/// plus circle intersection, flat bodies interpolated). Returns nullopt when
/// the circles miss (degenerate pose at this angle).
std::optional<PlanarConfig> prism_ladder_pose(const Framework& f, Edge removed,
                                              double theta, bool branch);

/// Four-bar pose of a quadrilateral from its line positions: edge {1,2}
/// pinned, vertex 3 cranked about 2, vertex 4 closed by circle intersection.
/// All four edge lengths hold by construction.
std::optional<PlanarConfig> cycle_pose(const Framework& f, double theta, bool branch);

struct FlexWitness {
  PlanarConfig config;
  Edge removed;
  double theta = 0.0;
  BranchFlags flags;
  double max_edge_residual = 0.0;    // over all edges, squared lengths
  double max_pair_sq_diff = 0.0;     // congruence gap, squared distances
  double max_pair_dist_diff = 0.0;   // congruence gap, distances
};

struct FlexSearchOptions {
  int steps = 10000;
  double theta_range = 3.14159265358979323846;
  double min_pair_dist_diff = 0.0;   // caller-imposed margin on top of the
                                     // 1e-4 squared-distance noncongruence gate
};

/// Scans all four branch/sweep combinations for a configuration where the
/// removed edge regains its squared length (transversal sign change of the
/// length error, bisected to 1e-12, or an identically-zero stretch of it) and
/// the result is noncongruent with 2-dimensional affine span. Returns the
/// lowest-angle witness in lexicographic branch order, or nullopt. A nullopt
/// is NOT a proof of rigidity; the search is one-sided. Supports the prism on
/// a line and 4-cycles (where every valid pose preserves all edge lengths and
/// the scan looks directly for a noncongruent pose).
std::optional<FlexWitness> find_alternate_realization(const Framework& f, Edge removed,
                                                      const FlexSearchOptions& options = {});

struct FlexPath {
  Edge removed;
  std::vector<double> thetas;
  std::vector<PlanarConfig> poses;
  std::vector<double> residuals;  // per-sample max squared-length error, retained edges
  double tolerance = 0.0;         // 1e-10 * (1 + max squared edge length)
};

/// Uniform angle grid, degenerate samples skipped. steps = 0 gives an empty path.
FlexPath trace_flex(const Framework& f, Edge removed, BranchFlags flags, int steps,
                    double theta_range = 3.14159265358979323846);

/// Float helpers shared with the acceptance checks.
double max_edge_residual(const Framework& f, const PlanarConfig& q);
double max_pair_sq_diff(const Framework& f, const PlanarConfig& q);
double max_pair_dist_diff(const Framework& f, const PlanarConfig& q);
/// Second singular value of the centered configuration (0 for collinear).
double planar_span_sigma2(const PlanarConfig& q);

}  // namespace rigidline
