#include "rigidline/gallery.hpp"

#include <algorithm>
#include <numeric>

#include "rigidline/rng.hpp"
#include "rigidline/transforms.hpp"

namespace rigidline {

namespace {

using json = nlohmann::ordered_json;

json rational_list(const Vec& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

json config_json(const Configuration& c) {
  json out = json::array();
  for (const Point& p : c.points) out.push_back(rational_list(p));
  return out;
}

Rational floor_rational(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) q -= 1;
  return Rational(q);
}

std::vector<int> sorted_vertex_order(const Framework& f) {
  std::vector<int> order(f.config.count());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return f.config.points[a - 1][0] < f.config.points[b - 1][0];
  });
  return order;
}

bool convex_in_cycle(const Configuration& c, const std::vector<int>& cycle) {
  int n = static_cast<int>(cycle.size());
  int sign = 0;
  for (int k = 0; k < n; ++k) {
    const Point& a = c.points[cycle[k] - 1];
    const Point& b = c.points[cycle[(k + 1) % n] - 1];
    const Point& d = c.points[cycle[(k + 2) % n] - 1];
    Rational cr = (b[0] - a[0]) * (d[1] - b[1]) - (b[1] - a[1]) * (d[0] - b[0]);
    if (cr == 0) return false;
    int s = cr > 0 ? 1 : -1;
    if (sign == 0)
      sign = s;
    else if (s != sign)
      return false;
  }
  return true;
}

Framework build_concurrent_rungs(const ConcurrentRungParams& params) {
  if (params.apex.size() != 2) throw Error(Errc::SchemaError, "apex must be planar");
  for (int k = 0; k < 3; ++k) {
    if (params.directions[k].size() != 2 || is_zero_vec(params.directions[k]))
      throw Error(Errc::SchemaError, "rung directions must be nonzero planar vectors");
    for (int j = k + 1; j < 3; ++j) {
      Rational cr = params.directions[k][0] * params.directions[j][1] -
                    params.directions[k][1] * params.directions[j][0];
      if (cr == 0) throw Error(Errc::SchemaError, "rung lines must be distinct");
    }
    if (params.extents[k].first == params.extents[k].second)
      throw Error(Errc::SchemaError, "rung endpoints coincide");
  }
  Configuration config;
  config.dim = 2;
  config.points.assign(6, Point(2, Rational(0)));
  for (int k = 0; k < 3; ++k) {
    config.points[k] = vec_add(params.apex, scaled(params.directions[k], params.extents[k].first));
    config.points[k + 3] =
        vec_add(params.apex, scaled(params.directions[k], params.extents[k].second));
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (config.points[i] == config.points[j])
        throw Error(Errc::SchemaError, "coincident vertices");
  return make_framework(prism_graph(), std::move(config));
}

json params_json(const ConcurrentRungParams& params) {
  json out;
  out["apex"] = rational_list(params.apex);
  json dirs = json::array(), exts = json::array();
  for (int k = 0; k < 3; ++k) {
    dirs.push_back(rational_list(params.directions[k]));
    exts.push_back(json::array(
        {to_string(params.extents[k].first), to_string(params.extents[k].second)}));
  }
  out["directions"] = std::move(dirs);
  out["extents"] = std::move(exts);
  return out;
}

ConcurrentRungParams canonical_desargues() {
  ConcurrentRungParams p;
  p.apex = {Rational(0), Rational(0)};
  p.directions = {Vec{Rational(1), Rational(0)}, Vec{Rational(1), Rational(1, 2)},
                  Vec{Rational(1), Rational(-3, 2)}};
  p.extents = {std::pair{Rational(5), Rational(12)}, {Rational(7), Rational(11)},
               {Rational(5), Rational(8)}};
  return p;
}

ConcurrentRungParams canonical_orchard() {
  ConcurrentRungParams p;
  p.apex = {Rational(20), Rational(6)};
  p.directions = {Vec{Rational(-1), Rational(-1, 5)}, Vec{Rational(-1), Rational(0)},
                  Vec{Rational(-1), Rational(1, 20)}};
  p.extents = {std::pair{Rational(47, 2), Rational(33, 2)}, {Rational(25), Rational(15)},
               {Rational(21), Rational(31, 2)}};
  return p;
}

/// Distinguished one-dimensional stress of a concurrent-rung placement, or
/// nullopt when the placement is degenerate (stress dimension != 1 or a zero
/// entry where the sign convention needs one).
std::optional<Stress> desargues_stress(const Framework& f) {
  std::vector<Stress> basis = equilibrium_stress_basis(f);
  if (basis.size() != 1) return std::nullopt;
  Stress w = basis[0];
  auto idx12 = f.graph.edge_index(1, 2);
  if (w.values[*idx12] == 0) return std::nullopt;
  if (w.values[*idx12] < 0) w = stress_scaled(w, Rational(-1));
  return w;
}

const std::vector<int> kHexCycle = {1, 2, 5, 4, 6, 3};

// stream tags so nested seeded searches draw from independent sequences
constexpr std::uint64_t kDirectionStream = 0x64697265ULL;
constexpr std::uint64_t kPerturbStream = 0x70657274ULL;

}  // namespace

Graph prism_graph() {
  return Graph(6, {Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(4, 5), Edge(5, 6),
                   Edge(4, 6), Edge(1, 4), Edge(2, 5), Edge(3, 6)});
}

GalleryItem stretched_cycle(const Vec& positions) {
  int n = static_cast<int>(positions.size());
  if (n < 3) throw Error(Errc::NotIncreasing, "need at least three positions");
  for (int i = 1; i < n; ++i)
    if (!(positions[i - 1] < positions[i]))
      throw Error(Errc::NotIncreasing, "positions must strictly increase");

  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  Graph graph(n, std::move(edges));
  Framework f = make_framework(graph, line_configuration(positions));

  // Chain recursion from the vertex equilibrium sums, then the smallest
  // integer scaling.
  Vec w(graph.edge_count(), Rational(0));
  Rational chain = 1;
  w[*graph.edge_index(1, 2)] = chain;
  for (int i = 2; i < n; ++i) {
    chain = chain * (positions[i - 1] - positions[i - 2]) /
            (positions[i] - positions[i - 1]);
    w[*graph.edge_index(i, i + 1)] = chain;
  }
  w[*graph.edge_index(1, n)] =
      -(positions[1] - positions[0]) / (positions[n - 1] - positions[0]);

  BigInt common = 1;
  for (const Rational& x : w) common = lcm(common, denominator(x));
  for (Rational& x : w) x *= Rational(common);
  BigInt g = 0;
  for (const Rational& x : w) g = gcd(g, numerator(x));
  if (g > 1)
    for (Rational& x : w) x /= Rational(g);

  GalleryItem item;
  item.name = "stretched-cycle";
  item.framework = std::move(f);
  item.stress = make_stress(graph, std::move(w));
  if (!is_equilibrium(item.framework, *item.stress))
    throw InternalInconsistency("stretched cycle stress is not an equilibrium stress");
  item.provenance["positions"] = rational_list(positions);
  return item;
}

GalleryItem alternating_cycle(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw Error(Errc::SchemaError, "alternating cycle needs an even n >= 4");
  Vec positions(n);
  Rng rng(seed);
  for (int k = 1; k <= n / 2; ++k) {
    positions[2 * k - 2] = Rational(k - 1) + rng.next_rational(125000, 1000000);
    positions[2 * k - 1] = Rational(n / 2 + k - 1) + rng.next_rational(125000, 1000000);
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  GalleryItem item;
  item.name = "alternating-cycle";
  item.framework = make_framework(Graph(n, std::move(edges)), line_configuration(positions));
  item.provenance["seed"] = seed;
  item.provenance["positions"] = rational_list(positions);
  return item;
}

GalleryItem prism_desargues_2d(const ConcurrentRungParams& params) {
  Framework f = build_concurrent_rungs(params);
  auto stress = desargues_stress(f);
  if (!stress)
    throw Error(Errc::SchemaError,
                "parameters do not give a one-dimensional stress space with a signed {1,2} entry");
  GalleryItem item;
  item.name = "prism-2d";
  item.framework = std::move(f);
  item.stress = std::move(*stress);
  item.provenance["parameters"] = params_json(params);
  return item;
}

GalleryItem prism_desargues_2d(std::uint64_t seed) {
  for (std::uint64_t trial = 0; trial < 10000; ++trial) {
    ConcurrentRungParams params = canonical_desargues();
    if (trial > 0) {
      Rng rng = Rng::for_trial(seed, trial);
      params.directions[1][1] = Rational(1, 2) + rng.next_rational(8, 16);
      params.directions[2][1] = Rational(-3, 2) + rng.next_rational(8, 16);
      for (int k = 0; k < 3; ++k) {
        params.extents[k].first += rng.next_rational(8, 8);
        params.extents[k].second += rng.next_rational(8, 8);
      }
    }
    Framework f;
    try {
      f = build_concurrent_rungs(params);
    } catch (const Error&) {
      continue;
    }
    auto stress = desargues_stress(f);
    if (!stress) continue;
    if (!convex_in_cycle(f.config, kHexCycle)) continue;
    SuperStabilityCertificate cert = certify_super_stable(f, *stress, seed);
    if (!cert.certified()) continue;

    GalleryItem item;
    item.name = "prism-2d";
    item.framework = std::move(f);
    item.stress = std::move(*stress);
    item.provenance["seed"] = seed;
    item.provenance["trial"] = trial;
    item.provenance["parameters"] = params_json(params);
    item.provenance["psd_rank"] = cert.psd->rank;
    item.provenance["convex_cycle"] = kHexCycle;
    return item;
  }
  throw Error(Errc::SearchFailed, "no certifiable concurrent-rung placement found");
}

PrismLineUrResult prism_line_ur(std::uint64_t seed) {
  GalleryItem planar = prism_desargues_2d(seed);
  const Stress& w_hat = *planar.stress;
  const Graph graph = planar.framework.graph;

  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    // Rational point on the unit circle: direction (1-t^2, 2t)/(1+t^2), a
    // generic small tilt of the x-axis.
    Rational t = Rational(-1, 2);
    if (trial > 0) t += Rng::for_trial(seed ^ kDirectionStream, trial).next_rational(16, 64);
    Vec direction{1 - t * t, 2 * t};
    ProjectionSplit split = project_orthogonal(planar.framework, {direction});
    if (!split.low_reduced)
      throw InternalInconsistency("pythagorean direction did not reduce");
    Framework line = *split.low_reduced;

    bool distinct = true;
    for (int i = 0; i < 6 && distinct; ++i)
      for (int j = i + 1; j < 6 && distinct; ++j)
        if (line.config.points[i][0] == line.config.points[j][0]) distinct = false;
    if (!distinct) continue;

    if (!is_equilibrium(line, w_hat))
      throw InternalInconsistency("projected stress lost equilibrium");

    // PSD rank-1 stress of the flat triangle {1,2,3} at its projected spots.
    Graph k3(3, {Edge(1, 2), Edge(1, 3), Edge(2, 3)});
    Framework tri = make_framework(
        k3, line_configuration({line.config.points[0][0], line.config.points[1][0],
                                line.config.points[2][0]}));
    std::vector<Stress> tri_basis = equilibrium_stress_basis(tri);
    if (tri_basis.size() != 1)
      throw InternalInconsistency("flat triangle stress space is not one-dimensional");
    Stress tri_stress = tri_basis[0];
    if (!psd_rank(stress_matrix(k3, tri_stress)).psd)
      tri_stress = stress_scaled(tri_stress, Rational(-1));

    Vec flat(graph.edge_count(), Rational(0));
    flat[*graph.edge_index(1, 2)] = tri_stress.values[*k3.edge_index(1, 2)];
    flat[*graph.edge_index(1, 3)] = tri_stress.values[*k3.edge_index(1, 3)];
    flat[*graph.edge_index(2, 3)] = tri_stress.values[*k3.edge_index(2, 3)];
    Stress flat_stress = make_stress(graph, std::move(flat));
    Stress sum = stress_sum(flat_stress, w_hat);

    PsdCertificate psd_flat = psd_rank(stress_matrix(graph, flat_stress));
    PsdCertificate psd_hat = psd_rank(stress_matrix(graph, w_hat));
    PsdCertificate psd_sum = psd_rank(stress_matrix(graph, sum));
    if (!(psd_flat.psd && psd_flat.rank == 1) || !(psd_hat.psd && psd_hat.rank == 3) ||
        !(psd_sum.psd && psd_sum.rank == 4))
      throw InternalInconsistency("stress rank arithmetic failed (expected 1 + 3 -> 4)");

    // Kernel of the sum must be exactly span{ones, line coordinates}.
    KernelResult kr = rref_kernel(stress_matrix(graph, sum));
    std::vector<Vec> stacked = kr.basis;
    stacked.push_back(Vec(6, Rational(1)));
    Vec xrow(6);
    for (int i = 0; i < 6; ++i) xrow[i] = line.config.points[i][0];
    stacked.push_back(xrow);
    if (kr.basis.size() != 2 || rank_of(MatrixR::from_rows(stacked)) != 2)
      throw InternalInconsistency("kernel of the summed stress is not span{1, x}");

    SuperStabilityCertificate pre_cert = certify_super_stable(line, sum, seed);
    if (!pre_cert.certified())
      throw InternalInconsistency("projection with summed stress did not certify");

    // Order-preserving perturbation, then re-certify through the nearest
    // equilibrium stress of the perturbed framework.
    Vec xs_sorted = xrow;
    std::sort(xs_sorted.begin(), xs_sorted.end());
    Rational min_gap = xs_sorted[1] - xs_sorted[0];
    for (std::size_t i = 2; i < xs_sorted.size(); ++i)
      min_gap = std::min(min_gap, Rational(xs_sorted[i] - xs_sorted[i - 1]));

    Rational magnitude = min_gap / 4;
    for (int attempt = 0; attempt < 6; ++attempt, magnitude /= 2) {
      std::uint64_t perturb_seed = Rng::for_trial(seed ^ kPerturbStream, trial).next_u64();
      Framework perturbed = perturb(line, magnitude, perturb_seed);

      std::vector<Stress> basis = equilibrium_stress_basis(perturbed);
      MatrixR b(static_cast<int>(basis.size()), graph.edge_count());
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) b.at(r, c) = basis[r].values[c];
      MatrixR gram = b * b.transposed();
      Vec rhs = b * sum.values;
      auto coeffs = solve(gram, rhs);
      if (!coeffs) throw InternalInconsistency("stress-space Gram system is singular");
      Vec candidate_values(graph.edge_count(), Rational(0));
      for (int r = 0; r < b.rows(); ++r)
        candidate_values = vec_add(candidate_values, scaled(basis[r].values, (*coeffs)[r]));
      Stress candidate = make_stress(graph, std::move(candidate_values));

      SuperStabilityCertificate cert = certify_super_stable(perturbed, candidate, seed);
      if (!cert.certified()) continue;

      PrismLineUrResult result;
      result.planar = planar.framework;
      result.planar_stress = w_hat;
      result.line_preperturb = line;
      result.flat_triangle_stress = flat_stress;
      result.sum_stress = sum;
      result.certificate = cert;
      result.order = sorted_vertex_order(perturbed);

      result.item.name = "prism-line-ur";
      result.item.framework = std::move(perturbed);
      result.item.stress = candidate;
      result.item.provenance["seed"] = seed;
      result.item.provenance["trial"] = trial;
      result.item.provenance["direction_parameter"] = to_string(t);
      result.item.provenance["perturbation_magnitude"] = to_string(magnitude);
      result.item.provenance["perturbation_seed"] = perturb_seed;
      result.item.provenance["order"] = result.order;
      result.item.provenance["rank_flat_triangle"] = psd_flat.rank;
      result.item.provenance["rank_planar_stress_on_line"] = psd_hat.rank;
      result.item.provenance["rank_sum"] = psd_sum.rank;
      result.item.provenance["planar_parameters"] = planar.provenance.contains("parameters")
                                                        ? planar.provenance["parameters"]
                                                        : json();
      result.item.provenance["preperturb_positions"] = config_json(line.config);
      return result;
    }
  }
  throw Error(Errc::SearchFailed, "no certifiable line projection found");
}

PrismLineFlexibleResult prism_line_flexible(const std::vector<int>& order,
                                            std::uint64_t seed) {
  if (order.size() != 6) throw Error(Errc::UsageError, "order must list six vertices");
  std::vector<bool> seen(7, false);
  for (int v : order) {
    if (v < 1 || v > 6 || seen[v]) throw Error(Errc::UsageError, "order must be a permutation of 1..6");
    seen[v] = true;
  }
  Graph graph = prism_graph();
  const Edge rungs[3] = {Edge(1, 4), Edge(2, 5), Edge(3, 6)};

  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    Vec positions(6);
    for (int rank = 1; rank <= 6; ++rank) {
      Rational pos(rank);
      if (rank != 1 && rank != 6) pos += rng.next_rational(250000, 1000000);
      positions[order[rank - 1] - 1] = pos;
    }
    Framework f = make_framework(graph, line_configuration(positions));
    if (sorted_vertex_order(f) != order) continue;

    for (const Edge& removed : rungs) {
      FlexSearchOptions options;
      options.min_pair_dist_diff = 5e-2;
      auto witness = find_alternate_realization(f, removed, options);
      if (!witness) continue;

      PrismLineFlexibleResult result;
      result.witness = witness->config;
      result.removed = removed;
      result.theta = witness->theta;
      result.flags = witness->flags;
      result.max_edge_residual = witness->max_edge_residual;
      result.max_pair_dist_diff = witness->max_pair_dist_diff;
      result.order = order;
      result.item.name = "prism-line-flex";
      result.item.framework = std::move(f);
      result.item.provenance["seed"] = seed;
      result.item.provenance["trial"] = trial;
      result.item.provenance["order"] = order;
      result.item.provenance["removed"] = json::array({removed.u, removed.v});
      result.item.provenance["theta"] = witness->theta;
      result.item.provenance["positions"] = rational_list(positions);
      return result;
    }
  }
  throw Error(Errc::SearchFailed, "no flexible near-integer realization found for this order");
}

namespace {

OrchardLadderResult orchard_from(const Framework& f, const ConcurrentRungParams& params,
                                 json provenance) {
  std::vector<Stress> basis = equilibrium_stress_basis(f);
  if (basis.size() != 1)
    throw Error(Errc::SchemaError, "ladder parameters do not force a one-dimensional stress space");
  Stress w = basis[0];
  PsdCertificate psd = psd_rank(stress_matrix(f.graph, w));
  if (!psd.psd) {
    w = stress_scaled(w, Rational(-1));
    psd = psd_rank(stress_matrix(f.graph, w));
  }
  if (!psd.psd || psd.rank != 3)
    throw Error(Errc::SchemaError, "ladder stress is not PSD of rank 3");
  SuperStabilityCertificate cert = certify_super_stable(f, w);
  if (!cert.certified())
    throw Error(Errc::SchemaError, "ladder does not certify super stable");

  ProjectionSplit split = project_orthogonal(f, 1);
  Framework projection = *split.low_reduced;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (projection.config.points[i][0] == projection.config.points[j][0])
        throw Error(Errc::SchemaError, "ladder projection collides");
  LiftCertificate lift = certify_by_lift(projection, f, w);
  if (!lift.certified)
    throw InternalInconsistency("ladder projection failed the lift test: " + lift.failed_check);

  OrchardLadderResult result;
  result.item.name = "orchard-ladder";
  result.item.framework = f;
  result.item.stress = w;
  result.item.provenance = std::move(provenance);
  result.item.provenance["parameters"] = params_json(params);
  result.item.provenance["psd_rank"] = 3;
  result.projection = std::move(projection);
  result.certificate = std::move(cert);
  result.lift = std::move(lift);
  return result;
}

}  // namespace

OrchardLadderResult orchard_ladder(const ConcurrentRungParams& params) {
  return orchard_from(build_concurrent_rungs(params), params, json::object());
}

OrchardLadderResult orchard_ladder(std::uint64_t seed) {
  for (std::uint64_t trial = 0; trial < 10000; ++trial) {
    ConcurrentRungParams params = canonical_orchard();
    if (trial > 0) {
      Rng rng = Rng::for_trial(seed, trial);
      params.directions[0][1] = Rational(-rng.next_int(1, 8), 20);
      params.directions[1][1] = Rational(rng.next_int(-5, 5), 40);
      params.directions[2][1] = Rational(rng.next_int(1, 8), 20);
      for (int k = 0; k < 3; ++k) {
        params.extents[k].first = Rational(rng.next_int(40, 50), 2);
        params.extents[k].second = Rational(rng.next_int(30, 39), 2);
      }
    }
    try {
      json prov;
      prov["seed"] = seed;
      prov["trial"] = trial;
      return orchard_from(build_concurrent_rungs(params), params, std::move(prov));
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(Errc::SearchFailed, "no certifiable orchard ladder found");
}

Framework perturb(const Framework& f, const Rational& magnitude, std::uint64_t seed) {
  if (!(magnitude > 0)) throw Error(Errc::UsageError, "perturbation magnitude must be positive");
  if (f.config.dim == 1) {
    Vec xs;
    for (const Point& p : f.config.points) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
      Rational gap = xs[i] - xs[i - 1];
      if (!(magnitude < gap / 2))
        throw Error(Errc::OrderViolation,
                    "magnitude " + to_string(magnitude) + " >= half the minimum gap " +
                        to_string(gap));
    }
  }
  long long cap = floor_rational(magnitude * 1000000).convert_to<long long>();
  Rng rng(seed);
  Configuration out = f.config;
  for (Point& p : out.points)
    for (Rational& x : p) x += rng.next_rational(cap, 1000000);
  return Framework{f.graph, std::move(out)};
}

bool is_gallery_name(const std::string& name) {
  return name == "stretched-cycle" || name == "alternating-cycle" || name == "prism-2d" ||
         name == "prism-line-ur" || name == "prism-line-flex" || name == "orchard-ladder";
}

}  // namespace rigidline
