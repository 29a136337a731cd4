#include "rigidline/framework.hpp"

namespace rigidline {

MatrixR Configuration::matrix() const {
  MatrixR m(dim, count());
  for (int j = 0; j < count(); ++j)
    for (int i = 0; i < dim; ++i) m.at(i, j) = points[j][i];
  return m;
}

MatrixR Configuration::augmented_matrix() const {
  MatrixR m(dim + 1, count());
  for (int j = 0; j < count(); ++j) {
    for (int i = 0; i < dim; ++i) m.at(i, j) = points[j][i];
    m.at(dim, j) = 1;
  }
  return m;
}

Framework make_framework(Graph graph, Configuration config) {
  if (config.count() != graph.vertex_count())
    throw Error(Errc::SchemaError, "configuration has " + std::to_string(config.count()) +
                                       " points for " + std::to_string(graph.vertex_count()) +
                                       " vertices");
  for (const Point& p : config.points)
    if (static_cast<int>(p.size()) != config.dim)
      throw Error(Errc::SchemaError, "coordinate arity mismatch");
  return Framework{std::move(graph), std::move(config)};
}

Configuration line_configuration(const Vec& positions) {
  Configuration c;
  c.dim = 1;
  for (const Rational& x : positions) c.points.push_back({x});
  return c;
}

Rational squared_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "point dimensions differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

int affine_span_dim(const Configuration& config) {
  int n = config.count();
  if (n < 1) throw Error(Errc::SchemaError, "affine span of empty configuration");
  if (n == 1) return 0;
  MatrixR diffs(n - 1, config.dim);
  for (int i = 1; i < n; ++i)
    for (int k = 0; k < config.dim; ++k)
      diffs.at(i - 1, k) = config.points[i][k] - config.points[0][k];
  return rank_of(diffs);
}

Framework reduce_to_affine_span(const Framework& f) {
  int span = affine_span_dim(f.config);
  if (span == f.config.dim) return f;
  int n = f.config.count();
  MatrixR diffs(n > 1 ? n - 1 : 1, f.config.dim);
  for (int i = 1; i < n; ++i)
    for (int c = 0; c < f.config.dim; ++c)
      diffs.at(i - 1, c) = f.config.points[i][c] - f.config.points[0][c];
  RrefResult rr = rref(diffs);
  // The reduced rows are an echelon basis of the span, so a span vector's
  // coordinates in that basis are its entries at the pivot columns.
  Configuration out;
  out.dim = rr.rank;
  out.points.assign(n, Point(rr.rank, Rational(0)));
  for (int i = 1; i < n; ++i)
    for (int r = 0; r < rr.rank; ++r)
      out.points[i][r] = f.config.points[i][rr.pivot_cols[r]] -
                         f.config.points[0][rr.pivot_cols[r]];
  return Framework{f.graph, std::move(out)};
}

bool check_equivalent(const Framework& f, const Configuration& q) {
  if (q.count() != f.graph.vertex_count())
    throw Error(Errc::DimensionlessInput, "point count mismatch");
  for (const Edge& e : f.graph.edges()) {
    if (squared_distance(f.config.points[e.u - 1], f.config.points[e.v - 1]) !=
        squared_distance(q.points[e.u - 1], q.points[e.v - 1]))
      return false;
  }
  return true;
}

bool check_congruent(const Framework& f, const Configuration& q) {
  int n = f.graph.vertex_count();
  if (q.count() != n) throw Error(Errc::DimensionlessInput, "point count mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (squared_distance(f.config.points[i], f.config.points[j]) !=
          squared_distance(q.points[i], q.points[j]))
        return false;
    }
  return true;
}

ValidationReport validate(const Framework& f) {
  ValidationReport r;
  r.n = f.graph.vertex_count();
  r.m = f.graph.edge_count();
  r.dim = f.config.dim;
  r.affine_span = affine_span_dim(f.config);
  r.connected = f.graph.is_connected();
  return r;
}

}  // namespace rigidline
