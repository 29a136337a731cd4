#include "rigidline/flex.hpp"

#include <algorithm>
#include <cmath>

#include "rigidline/floatmat.hpp"

namespace rigidline {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dist_sq(PlanarPoint a, PlanarPoint b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

const Edge kRungs[3] = {Edge(1, 4), Edge(2, 5), Edge(3, 6)};

bool is_prism_graph(const Graph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  static const int prism[9][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5},
                                  {3, 6}, {4, 5}, {4, 6}, {5, 6}};
  for (auto& e : prism)
    if (!g.has_edge(e[0], e[1])) return false;
  return true;
}

bool is_quadrilateral(const Graph& g) {
  return g.vertex_count() == 4 && g.edge_count() == 4 && g.has_edge(1, 2) &&
         g.has_edge(2, 3) && g.has_edge(3, 4) && g.has_edge(1, 4);
}

std::vector<double> line_positions(const Framework& f) {
  if (f.config.dim != 1)
    throw Error(Errc::WrongDimension, "flex machinery expects a line framework");
  std::vector<double> xs;
  xs.reserve(f.config.count());
  for (const Point& p : f.config.points) xs.push_back(to_double(p[0]));
  return xs;
}

/// Flat collinear triangles are rigid bodies exactly when their three
/// positions are distinct; then the middle point's betweenness additivity is
/// a rational identity. Verified exactly before any tracing.
void check_flat_triangle(const Framework& f, int a, int b, int c) {
  Rational xa = f.config.points[a - 1][0];
  Rational xb = f.config.points[b - 1][0];
  Rational xc = f.config.points[c - 1][0];
  if (xa == xb || xa == xc || xb == xc)
    throw Error(Errc::DegenerateSpan, "coincident points in a flat triangle");
  Rational lo = std::min({xa, xb, xc});
  Rational hi = std::max({xa, xb, xc});
  Rational mid = xa + xb + xc - lo - hi;
  if ((mid - lo) + (hi - mid) != (hi - lo))
    throw InternalInconsistency("flat triangle additivity failed");
}

/// Validated pose evaluator; all exact checks happen at construction, the
/// per-angle evaluation is plain float arithmetic.
struct PosePlan {
  bool cycle = false;
  std::vector<double> xs;
  Edge removed;
  // prism fields
  int a1 = 0, b1 = 0, a2 = 0, b2 = 0, b3 = 0;
  double len1 = 0, base1 = 0, len2 = 0, body = 0, interp = 0;
  // cycle fields
  double l23 = 0, l34 = 0, l14 = 0, base23 = 0;

  static PosePlan for_prism(const Framework& f, Edge removed) {
    bool is_rung = false;
    for (const Edge& r : kRungs) is_rung |= (removed == r);
    if (!is_rung) throw Error(Errc::UsageError, "removed edge must be a rung");
    check_flat_triangle(f, 1, 2, 3);
    check_flat_triangle(f, 4, 5, 6);
    PosePlan plan;
    plan.xs = line_positions(f);
    plan.removed = removed;
    Edge ret[2];
    int k = 0;
    for (const Edge& r : kRungs)
      if (!(r == removed)) ret[k++] = r;
    plan.a1 = ret[0].u;
    plan.b1 = ret[0].v;
    plan.a2 = ret[1].u;
    plan.b2 = ret[1].v;
    plan.b3 = 4 + 5 + 6 - plan.b1 - plan.b2;
    double delta1 = plan.xs[plan.b1 - 1] - plan.xs[plan.a1 - 1];
    plan.len1 = std::abs(delta1);
    plan.base1 = delta1 >= 0 ? 0.0 : kPi;  // theta = 0 reproduces the line pose
    plan.len2 = std::abs(plan.xs[plan.b2 - 1] - plan.xs[plan.a2 - 1]);
    plan.body = std::abs(plan.xs[plan.b2 - 1] - plan.xs[plan.b1 - 1]);
    plan.interp = (plan.xs[plan.b3 - 1] - plan.xs[plan.b1 - 1]) /
                  (plan.xs[plan.b2 - 1] - plan.xs[plan.b1 - 1]);
    return plan;
  }

  static PosePlan for_cycle(const Framework& f, Edge removed) {
    PosePlan plan;
    plan.cycle = true;
    plan.xs = line_positions(f);
    plan.removed = removed;
    plan.l23 = std::abs(plan.xs[2] - plan.xs[1]);
    plan.l34 = std::abs(plan.xs[3] - plan.xs[2]);
    plan.l14 = std::abs(plan.xs[3] - plan.xs[0]);
    plan.base23 = (plan.xs[2] - plan.xs[1]) >= 0 ? 0.0 : kPi;
    return plan;
  }

  std::optional<PlanarConfig> operator()(double theta, bool branch) const {
    if (cycle) {
      PlanarConfig q(4);
      q[0] = PlanarPoint{xs[0], 0.0};
      q[1] = PlanarPoint{xs[1], 0.0};
      q[2] = PlanarPoint{q[1].x + l23 * std::cos(base23 + theta),
                         q[1].y + l23 * std::sin(base23 + theta)};
      CircleResult cr = circle_circle_intersect(q[2], l34 * l34, q[0], l14 * l14, branch);
      if (cr.outcome != CircleOutcome::Ok) return std::nullopt;
      q[3] = cr.point;
      return q;
    }
    PlanarConfig q(6);
    for (int v : {1, 2, 3}) q[v - 1] = PlanarPoint{xs[v - 1], 0.0};
    q[b1 - 1] = PlanarPoint{q[a1 - 1].x + len1 * std::cos(base1 + theta),
                            q[a1 - 1].y + len1 * std::sin(base1 + theta)};
    CircleResult cr =
        circle_circle_intersect(q[a2 - 1], len2 * len2, q[b1 - 1], body * body, branch);
    if (cr.outcome != CircleOutcome::Ok) return std::nullopt;
    q[b2 - 1] = cr.point;
    q[b3 - 1] = PlanarPoint{q[b1 - 1].x + interp * (q[b2 - 1].x - q[b1 - 1].x),
                            q[b1 - 1].y + interp * (q[b2 - 1].y - q[b1 - 1].y)};
    return q;
  }
};

PosePlan make_plan(const Framework& f, Edge removed) {
  if (is_quadrilateral(f.graph)) {
    if (!f.graph.has_edge(removed.u, removed.v))
      throw Error(Errc::UsageError, "removed edge is not in the cycle");
    return PosePlan::for_cycle(f, removed);
  }
  if (is_prism_graph(f.graph)) return PosePlan::for_prism(f, removed);
  throw Error(Errc::UsageError, "supported topologies: prism on a line, 4-cycle");
}

}  // namespace

CircleResult circle_circle_intersect(PlanarPoint c1, double r1_sq, PlanarPoint c2,
                                     double r2_sq, bool branch) {
  CircleResult out;
  double dx = c2.x - c1.x, dy = c2.y - c1.y;
  double dd = dx * dx + dy * dy;
  if (dd == 0.0) {
    out.outcome = CircleOutcome::CoincidentCenters;
    return out;
  }
  double d = std::sqrt(dd);
  double a = (dd + r1_sq - r2_sq) / (2.0 * d);
  double h_sq = r1_sq - a * a;
  double slack = 1e-12 * std::max({1.0, r1_sq, r2_sq, dd});
  if (h_sq < -slack) {
    out.outcome = CircleOutcome::NoIntersection;
    return out;
  }
  double h = std::sqrt(std::max(0.0, h_sq));
  double ux = dx / d, uy = dy / d;
  double s = branch ? 1.0 : -1.0;
  out.outcome = CircleOutcome::Ok;
  out.point = PlanarPoint{c1.x + a * ux - s * h * uy, c1.y + a * uy + s * h * ux};
  return out;
}

std::optional<PlanarConfig> prism_ladder_pose(const Framework& f, Edge removed,
                                              double theta, bool branch) {
  if (!is_prism_graph(f.graph)) throw Error(Errc::UsageError, "not a prism framework");
  return PosePlan::for_prism(f, removed)(theta, branch);
}

std::optional<PlanarConfig> cycle_pose(const Framework& f, double theta, bool branch) {
  if (!is_quadrilateral(f.graph)) throw Error(Errc::UsageError, "not a 4-cycle framework");
  return PosePlan::for_cycle(f, Edge(1, 4))(theta, branch);
}

double max_edge_residual(const Framework& f, const PlanarConfig& q) {
  double worst = 0.0;
  for (const Edge& e : f.graph.edges()) {
    double want = to_double(
        squared_distance(f.config.points[e.u - 1], f.config.points[e.v - 1]));
    worst = std::max(worst, std::abs(dist_sq(q[e.u - 1], q[e.v - 1]) - want));
  }
  return worst;
}

double max_pair_sq_diff(const Framework& f, const PlanarConfig& q) {
  double worst = 0.0;
  int n = f.config.count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double want = to_double(squared_distance(f.config.points[i], f.config.points[j]));
      worst = std::max(worst, std::abs(dist_sq(q[i], q[j]) - want));
    }
  return worst;
}

double max_pair_dist_diff(const Framework& f, const PlanarConfig& q) {
  double worst = 0.0;
  int n = f.config.count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double want = std::sqrt(
          to_double(squared_distance(f.config.points[i], f.config.points[j])));
      worst = std::max(worst, std::abs(std::sqrt(dist_sq(q[i], q[j])) - want));
    }
  return worst;
}

double planar_span_sigma2(const PlanarConfig& q) {
  int n = static_cast<int>(q.size());
  double cx = 0, cy = 0;
  for (const PlanarPoint& p : q) {
    cx += p.x;
    cy += p.y;
  }
  cx /= n;
  cy /= n;
  FloatMat m(n, 2);
  for (int i = 0; i < n; ++i) {
    m.at(i, 0) = q[i].x - cx;
    m.at(i, 1) = q[i].y - cy;
  }
  std::vector<double> s = singular_values(m);
  return s.size() > 1 ? s[1] : 0.0;
}

namespace {

std::optional<FlexWitness> accept_pose(const Framework& f, Edge removed,
                                       const PlanarConfig& q, double theta,
                                       BranchFlags flags, double scale,
                                       const FlexSearchOptions& options) {
  FlexWitness w;
  w.config = q;
  w.removed = removed;
  w.theta = theta;
  w.flags = flags;
  w.max_edge_residual = max_edge_residual(f, q);
  w.max_pair_sq_diff = max_pair_sq_diff(f, q);
  w.max_pair_dist_diff = max_pair_dist_diff(f, q);
  if (w.max_edge_residual > 1e-10 * scale) return std::nullopt;
  if (w.max_pair_sq_diff <= 1e-4) return std::nullopt;  // congruent up to noise
  if (w.max_pair_dist_diff <= options.min_pair_dist_diff) return std::nullopt;
  if (planar_span_sigma2(q) <= 1e-6) return std::nullopt;
  return w;
}

}  // namespace

std::optional<FlexWitness> find_alternate_realization(const Framework& f, Edge removed,
                                                      const FlexSearchOptions& options) {
  PosePlan pose = make_plan(f, removed);
  double scale = 1.0;
  for (const Edge& e : f.graph.edges())
    scale = std::max(scale, 1.0 + to_double(squared_distance(f.config.points[e.u - 1],
                                                             f.config.points[e.v - 1])));
  double l_removed_sq = to_double(
      squared_distance(f.config.points[removed.u - 1], f.config.points[removed.v - 1]));

  for (bool branch : {true, false}) {
    for (double sweep : {1.0, -1.0}) {
      BranchFlags flags{branch, sweep > 0};
      double prev_theta = 0.0, prev_g = 0.0;
      bool have_prev = false;
      for (int k = 1; k <= options.steps; ++k) {
        double theta = sweep * options.theta_range * k / options.steps;
        auto q = pose(theta, branch);
        if (!q) {
          have_prev = false;
          continue;
        }
        if (pose.cycle) {
          // Every valid pose keeps all edge lengths; look for noncongruence.
          if (std::abs(theta) > 1e-3) {
            if (auto w = accept_pose(f, removed, *q, theta, flags, scale, options))
              return w;
          }
          continue;
        }
        double g = dist_sq((*q)[removed.u - 1], (*q)[removed.v - 1]) - l_removed_sq;
        // Identically-zero stretches (the removed edge never leaves its
        // length, e.g. parallel equal rungs) yield witnesses directly.
        if (std::abs(theta) > 1e-3 && std::abs(g) <= 1e-12 * scale) {
          if (auto w = accept_pose(f, removed, *q, theta, flags, scale, options)) return w;
        }
        if (have_prev && std::abs(prev_theta) > 1e-3 && std::abs(theta) > 1e-3 &&
            (g < 0) != (prev_g < 0)) {
          double lo = prev_theta, hi = theta, glo = prev_g;
          for (int iter = 0; iter < 200; ++iter) {
            double mid = 0.5 * (lo + hi);
            auto qm = pose(mid, branch);
            if (!qm) break;
            double gm =
                dist_sq((*qm)[removed.u - 1], (*qm)[removed.v - 1]) - l_removed_sq;
            if (std::abs(gm) <= 1e-12) {
              lo = hi = mid;
              break;
            }
            if ((gm < 0) == (glo < 0)) {
              lo = mid;
              glo = gm;
            } else {
              hi = mid;
            }
          }
          double root = 0.5 * (lo + hi);
          if (auto qr = pose(root, branch)) {
            if (auto w = accept_pose(f, removed, *qr, root, flags, scale, options))
              return w;
          }
        }
        prev_theta = theta;
        prev_g = g;
        have_prev = true;
      }
    }
  }
  return std::nullopt;
}

FlexPath trace_flex(const Framework& f, Edge removed, BranchFlags flags, int steps,
                    double theta_range) {
  PosePlan pose = make_plan(f, removed);
  FlexPath path;
  path.removed = removed;
  double max_sq = 0.0;
  for (const Edge& e : f.graph.edges())
    max_sq = std::max(max_sq, to_double(squared_distance(f.config.points[e.u - 1],
                                                         f.config.points[e.v - 1])));
  path.tolerance = 1e-10 * (1.0 + max_sq);
  double sweep = flags.sweep_positive ? 1.0 : -1.0;
  for (int k = 1; k <= steps; ++k) {
    double theta = sweep * theta_range * k / steps;
    auto q = pose(theta, flags.branch);
    if (!q) continue;
    double res = 0.0;  // retained edges only
    for (const Edge& e : f.graph.edges()) {
      if (!pose.cycle && e == removed) continue;
      double want = to_double(
          squared_distance(f.config.points[e.u - 1], f.config.points[e.v - 1]));
      res = std::max(res, std::abs(dist_sq((*q)[e.u - 1], (*q)[e.v - 1]) - want));
    }
    path.thetas.push_back(theta);
    path.poses.push_back(std::move(*q));
    path.residuals.push_back(res);
  }
  return path;
}

}  // namespace rigidline
