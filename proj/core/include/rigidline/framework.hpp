#pragma once

#include <vector>

#include "rigidline/graph.hpp"
#include "rigidline/matrix.hpp"
#include "rigidline/rational.hpp"

namespace rigidline {

using Point = Vec;  // d exact coordinates

/// n points in ambient dimension d. The affine span may be smaller than d.
struct Configuration {
  int dim = 0;
  std::vector<Point> points;

  int count() const { return static_cast<int>(points.size()); }
  /// d x n matrix whose columns are the points.
  MatrixR matrix() const;
  /// (d+1) x n matrix with an extra all-ones row at the bottom.
  MatrixR augmented_matrix() const;

  bool operator==(const Configuration&) const = default;
};

struct Framework {
  Graph graph;
  Configuration config;

  bool operator==(const Framework&) const = default;
};

Framework make_framework(Graph graph, Configuration config);

/// Convenience for 1-dimensional frameworks.
Configuration line_configuration(const Vec& positions);

Rational squared_distance(const Point& a, const Point& b);

/// Exact rank of [p_i - p_1], i.e. dimension of the affine hull.
int affine_span_dim(const Configuration& config);

/// Affine change of coordinates onto the configuration's span: the result has
/// ambient dimension equal to the span. Equilibrium stresses, stress-matrix
/// ranks and conic witnesses transfer both ways under this map. Identity when
/// the configuration already spans its ambient space.
Framework reduce_to_affine_span(const Framework& f);

/// Same squared length on every edge of f.graph.
bool check_equivalent(const Framework& f, const Configuration& q);
/// Same squared distance on every vertex pair.
bool check_congruent(const Framework& f, const Configuration& q);

struct ValidationReport {
  int n = 0, m = 0, dim = 0;
  int affine_span = 0;
  bool connected = false;
};

ValidationReport validate(const Framework& f);

}  // namespace rigidline
