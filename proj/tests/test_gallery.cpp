#include <doctest.h>

#include "rigidline/framework_io.hpp"
#include "rigidline/gallery.hpp"
#include "rigidline/rng.hpp"
#include "rigidline/transforms.hpp"

using namespace rigidline;

TEST_CASE("prism graph shape") {
  Graph g = prism_graph();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 9);
  for (int v = 1; v <= 6; ++v) CHECK(g.degree(v) == 3);
  // hamiltonian cycle 1-2-5-4-6-3-1 uses only graph edges
  int cyc[] = {1, 2, 5, 4, 6, 3};
  for (int k = 0; k < 6; ++k) CHECK(g.has_edge(cyc[k], cyc[(k + 1) % 6]));
}

TEST_CASE("stretched cycles carry their documented stresses") {
  GalleryItem quad = stretched_cycle({Rational(0), Rational(1), Rational(3), Rational(6)});
  CHECK(quad.stress->values == Vec{Rational(6), Rational(-1), Rational(3), Rational(2)});
  CHECK(is_equilibrium(quad.framework, *quad.stress));

  GalleryItem five =
      stretched_cycle({Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)});
  SuperStabilityCertificate cert = certify_super_stable(five.framework, five.stress);
  REQUIRE(cert.certified());
  CHECK(cert.psd->rank == 3);

  GalleryItem tri = stretched_cycle({Rational(0), Rational(1), Rational(3)});
  CHECK(tri.stress->values == Vec{Rational(6), Rational(-2), Rational(3)});
  SuperStabilityCertificate tcert = certify_super_stable(tri.framework, tri.stress);
  CHECK(tcert.certified());
  CHECK(tcert.psd->rank == 1);

  CHECK_THROWS_AS(stretched_cycle({Rational(0), Rational(1), Rational(1)}), Error);
  CHECK_THROWS_AS(stretched_cycle({Rational(0), Rational(1)}), Error);
}

TEST_CASE("alternating cycles do not certify") {
  for (std::uint64_t seed : {0ull, 3ull}) {
    GalleryItem alt = alternating_cycle(4, seed);
    std::vector<Stress> basis = equilibrium_stress_basis(alt.framework);
    CHECK(basis.size() == 1);
    SuperStabilityCertificate cert = certify_super_stable(alt.framework, std::nullopt, seed);
    CHECK(!cert.certified());
  }
  GalleryItem alt6 = alternating_cycle(6, 1);
  CHECK(!certify_super_stable(alt6.framework).certified());
  CHECK_THROWS_AS(alternating_cycle(5, 0), Error);
}

TEST_CASE("canonical concurrent-rung prism instance") {
  GalleryItem item = prism_desargues_2d(std::uint64_t{0});
  REQUIRE(item.stress.has_value());
  CHECK(item.stress->values[*item.framework.graph.edge_index(1, 2)] > 0);
  PsdCertificate psd = psd_rank(stress_matrix(item.framework.graph, *item.stress));
  CHECK(psd.psd);
  CHECK(psd.rank == 3);
  CHECK(!conic_at_infinity(item.framework).has_value());
  CHECK(is_equilibrium(item.framework, *item.stress));
}

TEST_CASE("generic planar prism is isostatic; concurrency forces the stress") {
  // move one rung endpoint off its concurrent line: stress space collapses
  ConcurrentRungParams params;
  params.apex = {Rational(0), Rational(0)};
  params.directions = {Vec{Rational(1), Rational(0)}, Vec{Rational(1), Rational(1, 2)},
                       Vec{Rational(1), Rational(-3, 2)}};
  params.extents = {std::pair{Rational(5), Rational(12)}, {Rational(7), Rational(11)},
                    {Rational(5), Rational(8)}};
  Framework concurrent = prism_desargues_2d(params).framework;
  CHECK(equilibrium_stress_basis(concurrent).size() == 1);

  Framework bent = concurrent;
  bent.config.points[4][1] += Rational(1, 1000);  // vertex 5 leaves its rung line
  CHECK(equilibrium_stress_basis(bent).empty());
}

TEST_CASE("concurrency property over seeded placements") {
  int concurrent_with_stress = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::for_trial(12345, trial);
    ConcurrentRungParams params;
    params.apex = {Rational(0), Rational(0)};
    params.directions = {Vec{Rational(1), Rational(0)},
                         Vec{Rational(1), Rational(1, 2) + rng.next_rational(8, 16)},
                         Vec{Rational(1), Rational(-3, 2) + rng.next_rational(8, 16)}};
    params.extents = {std::pair{Rational(5) + rng.next_rational(8, 8),
                                Rational(12) + rng.next_rational(8, 8)},
                      {Rational(7) + rng.next_rational(8, 8),
                       Rational(11) + rng.next_rational(8, 8)},
                      {Rational(5) + rng.next_rational(8, 8),
                       Rational(8) + rng.next_rational(8, 8)}};
    Framework f;
    try {
      f = prism_desargues_2d(params).framework;
    } catch (const Error&) {
      continue;
    }
    std::vector<Stress> basis = equilibrium_stress_basis(f);
    CHECK(basis.size() >= 1);
    ++concurrent_with_stress;

    Framework bent = f;
    bent.config.points[3][1] += Rational(1, 1000);
    CHECK(equilibrium_stress_basis(bent).empty());
  }
  CHECK(concurrent_with_stress >= 90);  // nearly every draw is nondegenerate
}

TEST_CASE("line projection pipeline: ranks, kernel, certificate, order") {
  PrismLineUrResult ur = prism_line_ur(0);
  REQUIRE(ur.certificate.certified());
  CHECK(ur.certificate.psd->rank == 4);
  CHECK(ur.certificate.required_rank == 4);

  const Graph& g = ur.item.framework.graph;
  CHECK(rank_of(stress_matrix(g, ur.flat_triangle_stress)) == 1);
  CHECK(rank_of(stress_matrix(g, ur.planar_stress)) == 3);
  CHECK(rank_of(stress_matrix(g, ur.sum_stress)) == 4);

  // the pre-perturbation projection is an affine image of the planar instance
  CHECK(check_affine_image(ur.planar.config, ur.line_preperturb.config).has_value());

  // perturbation kept vertex order
  std::vector<int> expected_order = ur.order;
  CHECK(expected_order.size() == 6);
  CHECK(is_universal_for(ur.line_preperturb, ur.sum_stress));

  // lift of the pre-perturbed projection through the planar instance
  LiftCertificate lift = certify_by_lift(ur.line_preperturb, ur.planar, ur.planar_stress);
  CHECK(lift.certified);
}

TEST_CASE("flexible counterpart shares the sorted order and flexes") {
  PrismLineUrResult ur = prism_line_ur(0);
  PrismLineFlexibleResult flex = prism_line_flexible(ur.order, 0);
  CHECK(flex.order == ur.order);
  CHECK(flex.max_edge_residual <= 1e-10 * 100);
  CHECK(flex.max_pair_dist_diff > 5e-2);
  // endpoints pinned at 1 and 6
  const Configuration& c = flex.item.framework.config;
  CHECK(c.points[ur.order[0] - 1][0] == 1);
  CHECK(c.points[ur.order[5] - 1][0] == 6);
  // the witness is planar, not collinear
  CHECK(planar_span_sigma2(flex.witness) > 1e-6);
  // opposite certification outcomes
  CHECK(!certify_super_stable(flex.item.framework).certified());

  CHECK_THROWS_AS(prism_line_flexible({1, 2, 3}, 0), Error);
  CHECK_THROWS_AS(prism_line_flexible({1, 1, 2, 3, 4, 5}, 0), Error);
}

TEST_CASE("orchard ladder certifies and its projection lifts") {
  OrchardLadderResult ladder = orchard_ladder(std::uint64_t{0});
  CHECK(ladder.certificate.certified());
  CHECK(ladder.certificate.psd->rank == 3);
  CHECK(ladder.lift.certified);
  CHECK(ladder.projection.config.dim == 1);
  CHECK(check_affine_image(ladder.item.framework.config, ladder.projection.config).has_value());
}

TEST_CASE("perturb: determinism, order preservation, bounds") {
  GalleryItem sc = stretched_cycle({Rational(0), Rational(1), Rational(3), Rational(6)});
  Framework a = perturb(sc.framework, Rational(1, 100), 42);
  Framework b = perturb(sc.framework, Rational(1, 100), 42);
  CHECK(a == b);
  Framework c = perturb(sc.framework, Rational(1, 100), 43);
  CHECK(!(a == c));

  for (int i = 0; i < 4; ++i) {
    Rational delta = a.config.points[i][0] - sc.framework.config.points[i][0];
    CHECK(delta <= Rational(1, 100));
    CHECK(delta >= Rational(-1, 100));
    CHECK(denominator(delta) <= 1000000);
  }

  CHECK_THROWS_AS(perturb(sc.framework, Rational(0), 1), Error);
  CHECK_THROWS_AS(perturb(sc.framework, Rational(1), 1), Error);  // >= half min gap

  // perturbed stretched cycle stays certified: open condition
  Framework still = perturb(sc.framework, Rational(1, 100), 7);
  CHECK(certify_super_stable(still).certified());
}

TEST_CASE("gallery names") {
  CHECK(is_gallery_name("prism-line-ur"));
  CHECK(is_gallery_name("orchard-ladder"));
  CHECK(!is_gallery_name("unknown"));
}

TEST_CASE("bending one ladder rung endpoint kills its stress space") {
  OrchardLadderResult ladder = orchard_ladder(std::uint64_t{0});
  Framework bent = ladder.item.framework;
  bent.config.points[3][1] += Rational(1, 1000);  // vertex 4 leaves its rung line
  CHECK(equilibrium_stress_basis(bent).empty());
}
