#include "rigidline/stress.hpp"

namespace rigidline {

Rational Stress::at(int i, int j) const {
  auto idx = graph.edge_index(i, j);
  return idx ? values[*idx] : Rational(0);
}

Stress make_stress(const Graph& graph, Vec values) {
  if (static_cast<int>(values.size()) != graph.edge_count())
    throw Error(Errc::IndexMismatch, "stress length does not match edge count");
  return Stress{graph, std::move(values)};
}

Stress stress_scaled(const Stress& w, const Rational& s) {
  return Stress{w.graph, scaled(w.values, s)};
}

Stress stress_sum(const Stress& a, const Stress& b) {
  if (a.graph != b.graph) throw Error(Errc::GraphMismatch, "stress sum across graphs");
  return Stress{a.graph, vec_add(a.values, b.values)};
}

MatrixR stress_matrix(const Graph& graph, const Stress& w) {
  if (w.graph != graph) throw Error(Errc::IndexMismatch, "stress indexed by another graph");
  int n = graph.vertex_count();
  MatrixR omega(n, n);
  for (int k = 0; k < graph.edge_count(); ++k) {
    const Edge& e = graph.edge(k);
    const Rational& x = w.values[k];
    omega.at(e.u - 1, e.v - 1) -= x;
    omega.at(e.v - 1, e.u - 1) -= x;
    omega.at(e.u - 1, e.u - 1) += x;
    omega.at(e.v - 1, e.v - 1) += x;
  }
  return omega;
}

MatrixR rigidity_matrix(const Framework& f) {
  int n = f.graph.vertex_count();
  int d = f.config.dim;
  MatrixR r(f.graph.edge_count(), d * n);
  for (int k = 0; k < f.graph.edge_count(); ++k) {
    const Edge& e = f.graph.edge(k);
    const Point& pi = f.config.points[e.u - 1];
    const Point& pj = f.config.points[e.v - 1];
    for (int c = 0; c < d; ++c) {
      r.at(k, (e.u - 1) * d + c) = pi[c] - pj[c];
      r.at(k, (e.v - 1) * d + c) = pj[c] - pi[c];
    }
  }
  return r;
}

std::vector<Stress> equilibrium_stress_basis(const Framework& f) {
  KernelResult kr = rref_kernel(rigidity_matrix(f).transposed());
  std::vector<Stress> basis;
  basis.reserve(kr.basis.size());
  for (Vec& v : kr.basis) basis.push_back(Stress{f.graph, std::move(v)});
  return basis;
}

bool is_equilibrium(const Framework& f, const Stress& w) {
  if (w.graph != f.graph) throw Error(Errc::IndexMismatch, "stress indexed by another graph");
  int n = f.graph.vertex_count();
  int d = f.config.dim;

  // Route 1: weighted edge-vector sums at every vertex.
  bool vertex_route = true;
  std::vector<Vec> residual(n, Vec(d, Rational(0)));
  for (int k = 0; k < f.graph.edge_count(); ++k) {
    const Edge& e = f.graph.edge(k);
    const Rational& x = w.values[k];
    if (x == 0) continue;
    for (int c = 0; c < d; ++c) {
      Rational diff = f.config.points[e.u - 1][c] - f.config.points[e.v - 1][c];
      residual[e.u - 1][c] += x * diff;
      residual[e.v - 1][c] -= x * diff;
    }
  }
  for (const Vec& r : residual)
    if (!is_zero_vec(r)) {
      vertex_route = false;
      break;
    }

  // Route 2: augmented configuration annihilates the stress matrix.
  bool matrix_route = (f.config.augmented_matrix() * stress_matrix(f.graph, w)).is_zero();

  if (vertex_route != matrix_route)
    throw InternalInconsistency("equilibrium routes disagree");
  return vertex_route;
}

Configuration universal_configuration(const Graph& graph, const Stress& w) {
  if (w.is_zero()) throw Error(Errc::ZeroStress, "universal configuration of the zero stress");
  int n = graph.vertex_count();
  KernelResult kr = rref_kernel(stress_matrix(graph, w));

  // Project out the all-ones direction, then orthogonalize what remains.
  std::vector<Vec> centered;
  for (const Vec& v : kr.basis) {
    Rational mean = 0;
    for (const Rational& x : v) mean += x;
    mean /= n;
    Vec c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i] - mean;
    centered.push_back(std::move(c));
  }
  std::vector<Vec> rows = gram_schmidt(centered);

  Configuration config;
  config.dim = static_cast<int>(rows.size());
  config.points.assign(n, Point(config.dim, Rational(0)));
  for (int r = 0; r < config.dim; ++r)
    for (int i = 0; i < n; ++i) config.points[i][r] = rows[r][i];
  return config;
}

bool is_universal_for(const Framework& f, const Stress& w) {
  MatrixR omega = stress_matrix(f.graph, w);
  MatrixR aug = f.config.augmented_matrix();
  if (!(aug * omega).is_zero()) return false;
  int kernel_dim = f.graph.vertex_count() - rank_of(omega);
  return rank_of(aug) == kernel_dim;
}

std::optional<ConicWitness> conic_at_infinity(const Framework& f) {
  int d = f.config.dim;
  if (d < 1) throw Error(Errc::WrongDimension, "conic test needs dimension >= 1");
  int unknowns = d * (d + 1) / 2;
  MatrixR system(f.graph.edge_count(), unknowns);
  for (int k = 0; k < f.graph.edge_count(); ++k) {
    const Edge& edge = f.graph.edge(k);
    Vec e = vec_sub(f.config.points[edge.u - 1], f.config.points[edge.v - 1]);
    int col = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        // e^T Q e in the independent entries of symmetric Q; cross terms twice.
        system.at(k, col++) = (a == b) ? Rational(e[a] * e[a]) : Rational(2 * e[a] * e[b]);
      }
  }
  KernelResult kr = rref_kernel(system);
  if (kr.basis.empty()) return std::nullopt;

  MatrixR q(d, d);
  int col = 0;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      q.at(a, b) = kr.basis[0][col];
      q.at(b, a) = kr.basis[0][col];
      ++col;
    }
  // Verify before returning: every edge direction must lie on the conic.
  for (const Edge& edge : f.graph.edges()) {
    Vec e = vec_sub(f.config.points[edge.u - 1], f.config.points[edge.v - 1]);
    if (dot(e, q * e) != 0) throw InternalInconsistency("conic witness fails an edge");
  }
  return ConicWitness{std::move(q)};
}

bool is_infinitesimally_rigid(const Framework& f) {
  int n = f.graph.vertex_count();
  int d = f.config.dim;
  if (affine_span_dim(f.config) < d)
    throw Error(Errc::DegenerateSpan, "configuration does not span the ambient dimension");
  if (n < d + 1)
    throw Error(Errc::DegenerateSpan, "too few vertices to span the ambient dimension");
  return rank_of(rigidity_matrix(f)) == d * n - d * (d + 1) / 2;
}

}  // namespace rigidline
