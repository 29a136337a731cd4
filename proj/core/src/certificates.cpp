#include "rigidline/certificates.hpp"

#include <algorithm>

#include "rigidline/rng.hpp"

namespace rigidline {

const char* reason_name(NotCertifiedReason reason) {
  switch (reason) {
    case NotCertifiedReason::None: return "none";
    case NotCertifiedReason::NoEquilibriumStress: return "NoEquilibriumStress";
    case NotCertifiedReason::SearchExhausted: return "SearchExhausted";
    case NotCertifiedReason::ConicAtInfinity: return "ConicAtInfinity";
    case NotCertifiedReason::CandidateFails: return "CandidateFails";
  }
  return "unknown";
}

namespace {

bool stress_certifies(const Framework& f, const Stress& w, int required_rank,
                      PsdCertificate& psd_out) {
  if (!is_equilibrium(f, w)) return false;
  PsdCertificate psd = psd_rank(stress_matrix(f.graph, w));
  if (!psd.psd || psd.rank != required_rank) return false;
  psd_out = std::move(psd);
  return true;
}

}  // namespace

SuperStabilityCertificate certify_super_stable(const Framework& f,
                                               const std::optional<Stress>& candidate,
                                               std::uint64_t seed) {
  SuperStabilityCertificate cert;
  cert.seed = seed;
  int n = f.graph.vertex_count();
  cert.span_dim = affine_span_dim(f.config);
  cert.required_rank = n - cert.span_dim - 1;

  // Affinely independent points of a complete graph: universally rigid by
  // congruence, and there is no nonzero stress to exhibit.
  if (f.graph.is_complete() && cert.span_dim == n - 1) {
    cert.verdict = CertifyVerdict::CompleteSimplex;
    cert.detail = "complete graph on affinely independent points";
    return cert;
  }
  if (cert.span_dim == 0) {
    // All points coincide: every edge direction vanishes, so every conic
    // passes through them.
    cert.verdict = CertifyVerdict::NotCertified;
    cert.reason = NotCertifiedReason::ConicAtInfinity;
    cert.detail = "configuration is a single point";
    return cert;
  }

  Framework reduced = reduce_to_affine_span(f);
  cert.conic_free = !conic_at_infinity(reduced).has_value();
  if (!cert.conic_free) {
    cert.verdict = CertifyVerdict::NotCertified;
    cert.reason = NotCertifiedReason::ConicAtInfinity;
    cert.detail = "edge directions lie on a conic at infinity";
    return cert;
  }

  if (candidate) {
    cert.search_recipe = "candidate";
    PsdCertificate psd;
    if (!is_equilibrium(f, *candidate)) {
      cert.reason = NotCertifiedReason::CandidateFails;
      cert.detail = "candidate is not an equilibrium stress";
      return cert;
    }
    psd = psd_rank(stress_matrix(f.graph, *candidate));
    if (!psd.psd) {
      cert.reason = NotCertifiedReason::CandidateFails;
      cert.detail = "candidate stress matrix is not PSD";
      cert.psd = std::move(psd);
      return cert;
    }
    if (psd.rank != cert.required_rank) {
      cert.reason = NotCertifiedReason::CandidateFails;
      cert.detail = "candidate PSD rank " + std::to_string(psd.rank) + " != required " +
                    std::to_string(cert.required_rank);
      cert.psd = std::move(psd);
      return cert;
    }
    cert.verdict = CertifyVerdict::Certified;
    cert.stress = *candidate;
    cert.psd = std::move(psd);
    return cert;
  }

  std::vector<Stress> basis = equilibrium_stress_basis(f);
  if (basis.empty()) {
    cert.reason = NotCertifiedReason::NoEquilibriumStress;
    cert.detail = "equilibrium stress space is trivial";
    return cert;
  }
  cert.search_recipe = "signed-basis, pairwise sums/differences, 1000 seeded integer combinations in [-9,9]";

  auto try_stress = [&](const Stress& w) -> bool {
    if (w.is_zero()) return false;
    PsdCertificate psd;
    if (!stress_certifies(f, w, cert.required_rank, psd)) return false;
    cert.verdict = CertifyVerdict::Certified;
    cert.stress = w;
    cert.psd = std::move(psd);
    return true;
  };

  const int k = static_cast<int>(basis.size());
  for (int i = 0; i < k; ++i) {
    if (try_stress(basis[i])) return cert;
    if (try_stress(stress_scaled(basis[i], Rational(-1)))) return cert;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Stress sum = stress_sum(basis[i], basis[j]);
      if (try_stress(sum)) return cert;
      if (try_stress(stress_scaled(sum, Rational(-1)))) return cert;
      Stress diff = Stress{f.graph, vec_sub(basis[i].values, basis[j].values)};
      if (try_stress(diff)) return cert;
      if (try_stress(stress_scaled(diff, Rational(-1)))) return cert;
    }
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    Vec combo(f.graph.edge_count(), Rational(0));
    bool nonzero = false;
    for (int i = 0; i < k; ++i) {
      long long c = rng.next_int(-9, 9);
      if (c == 0) continue;
      nonzero = true;
      combo = vec_add(combo, scaled(basis[i].values, Rational(c)));
    }
    if (!nonzero) continue;
    if (try_stress(Stress{f.graph, combo})) return cert;
  }

  cert.reason = NotCertifiedReason::SearchExhausted;
  cert.detail = "no PSD stress of rank " + std::to_string(cert.required_rank) +
                " found in a " + std::to_string(k) + "-dimensional stress space";
  return cert;
}

LiftCertificate certify_by_lift(const Framework& low, const Framework& high,
                                const Stress& w) {
  if (low.graph != high.graph) throw Error(Errc::GraphMismatch, "lift across different graphs");
  if (w.graph != low.graph) throw Error(Errc::GraphMismatch, "stress indexed by another graph");
  LiftCertificate out;
  int n = low.graph.vertex_count();
  out.high_span = affine_span_dim(high.config);
  out.required_rank = n - out.high_span - 1;

  if (!is_equilibrium(high, w)) {
    out.failed_check = "stress is not an equilibrium stress of the high framework";
    return out;
  }
  if (!is_equilibrium(low, w)) {
    out.failed_check = "stress is not an equilibrium stress of the low framework";
    return out;
  }
  // The conic is evaluated on the high framework as given; a degenerate high
  // (edges on a conic, e.g. all horizontal) is rejected here before any rank
  // accounting.
  if (conic_at_infinity(high)) {
    out.failed_check = "high framework's edge directions lie on a conic at infinity";
    return out;
  }
  PsdCertificate psd = psd_rank(stress_matrix(low.graph, w));
  out.psd = psd;
  if (!psd.psd) {
    out.failed_check = "stress matrix is not PSD";
    return out;
  }
  if (psd.rank != out.required_rank) {
    out.failed_check = "PSD rank " + std::to_string(psd.rank) + " != " +
                       std::to_string(out.required_rank) + " (n - D - 1)";
    return out;
  }
  if (!(low.config.augmented_matrix() * stress_matrix(low.graph, w)).is_zero()) {
    out.failed_check = "low configuration does not satisfy the stress";
    return out;
  }
  out.certified = true;
  return out;
}

namespace {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

/// Gift wrapping with exact predicates. Returns the hull cycle (0-based) when
/// every point is a strict hull vertex, otherwise an empty vector.
std::vector<int> strict_hull_cycle(const std::vector<Point>& pts) {
  int n = static_cast<int>(pts.size());
  if (n < 3) return {};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) return {};

  int start = 0;
  for (int i = 1; i < n; ++i)
    if (pts[i][0] < pts[start][0] ||
        (pts[i][0] == pts[start][0] && pts[i][1] < pts[start][1]))
      start = i;

  std::vector<int> cycle;
  int current = start;
  do {
    cycle.push_back(current);
    if (static_cast<int>(cycle.size()) > n) return {};
    int next = -1;
    for (int cand = 0; cand < n; ++cand) {
      if (cand == current) continue;
      if (next < 0) {
        next = cand;
        continue;
      }
      Rational cr = cross(pts[current], pts[next], pts[cand]);
      if (cr < 0) {
        next = cand;
      } else if (cr == 0) {
        // Collinear with the current candidate ray: keep the farther point.
        if (squared_distance(pts[current], pts[cand]) >
            squared_distance(pts[current], pts[next]))
          next = cand;
      }
    }
    current = next;
  } while (current != start);

  if (static_cast<int>(cycle.size()) != n) return {};
  // No three consecutive hull points may be collinear.
  for (int k = 0; k < n; ++k) {
    if (cross(pts[cycle[k]], pts[cycle[(k + 1) % n]], pts[cycle[(k + 2) % n]]) == 0)
      return {};
  }
  return cycle;
}

}  // namespace

ConvexPolygonReport check_convex_polygon_stress(const Framework& f, const Stress& w) {
  if (f.config.dim != 2)
    throw Error(Errc::WrongDimension, "convex polygon criterion needs a planar framework");
  if (w.graph != f.graph) throw Error(Errc::IndexMismatch, "stress indexed by another graph");
  ConvexPolygonReport report;
  int n = f.graph.vertex_count();

  std::vector<int> cycle = strict_hull_cycle(f.config.points);
  report.strictly_convex = !cycle.empty();
  if (report.strictly_convex) {
    for (int v : cycle) report.hull_cycle.push_back(v + 1);
    std::vector<bool> is_hull_edge(f.graph.edge_count(), false);
    report.hull_edges_present = true;
    for (int k = 0; k < n; ++k) {
      int a = report.hull_cycle[k], b = report.hull_cycle[(k + 1) % n];
      auto idx = f.graph.edge_index(a, b);
      if (!idx) {
        report.hull_edges_present = false;
        break;
      }
      is_hull_edge[*idx] = true;
    }
    if (report.hull_edges_present) {
      report.boundary_positive = true;
      report.interior_negative = true;
      for (int k = 0; k < f.graph.edge_count(); ++k) {
        if (is_hull_edge[k] && w.values[k] <= 0) report.boundary_positive = false;
        if (!is_hull_edge[k] && w.values[k] >= 0) report.interior_negative = false;
      }
    }
  }
  report.equilibrium = is_equilibrium(f, w);
  report.hypotheses_hold = report.strictly_convex && report.hull_edges_present &&
                           report.boundary_positive && report.interior_negative &&
                           report.equilibrium;

  PsdCertificate psd = psd_rank(stress_matrix(f.graph, w));
  report.conclusion_psd = psd.psd && psd.rank == n - 3;
  report.psd_rank_value = psd.psd ? psd.rank : -1;

  if (report.hypotheses_hold && !report.conclusion_psd)
    throw InternalInconsistency(
        "convex boundary-positive interior-negative stress is not PSD of rank n-3");
  return report;
}

std::optional<AffineMap> check_affine_image(const Configuration& p,
                                            const Configuration& q) {
  if (p.count() != q.count()) throw Error(Errc::CountMismatch, "point counts differ");
  int n = p.count();
  int cols = p.dim + 1;
  MatrixR system(n, cols);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < p.dim; ++c) system.at(i, c) = p.points[i][c];
    system.at(i, p.dim) = 1;
  }
  AffineMap map;
  map.a = MatrixR(q.dim, p.dim);
  map.b = Vec(q.dim, Rational(0));
  for (int r = 0; r < q.dim; ++r) {
    Vec rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = q.points[i][r];
    auto x = solve(system, rhs);
    if (!x) return std::nullopt;
    for (int c = 0; c < p.dim; ++c) map.a.at(r, c) = (*x)[c];
    map.b[r] = (*x)[p.dim];
  }
  // Verified by substitution before returning.
  for (int i = 0; i < n; ++i) {
    Vec image = vec_add(map.a * p.points[i], map.b);
    if (image != q.points[i]) throw InternalInconsistency("affine solve failed verification");
  }
  return map;
}

}  // namespace rigidline
