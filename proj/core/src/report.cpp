#include "rigidline/report.hpp"

#include <cinttypes>
#include <cstdio>

namespace rigidline {

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return std::string("fnv1a:") + buf;
}

ReportJson report_header(const std::string& command, const std::string& input_name,
                         const std::string& input_bytes) {
  ReportJson j;
  j["schema"] = "rigidline/1";
  j["command"] = command;
  j["input"] = ReportJson{{"name", input_name}, {"digest", fnv1a_digest(input_bytes)}};
  return j;
}

ReportJson framework_summary(const Framework& f) {
  ValidationReport v = validate(f);
  ReportJson j;
  j["n"] = v.n;
  j["m"] = v.m;
  j["dimension"] = v.dim;
  j["affine_span"] = v.affine_span;
  j["connected"] = v.connected;
  if (v.affine_span == v.dim && v.n >= v.dim + 1) {
    j["infinitesimally_rigid"] = is_infinitesimally_rigid(f);
  } else {
    j["infinitesimally_rigid"] = nullptr;
    j["infinitesimally_rigid_note"] = "configuration does not span the ambient dimension";
  }
  return j;
}

ReportJson stress_json(const Stress& w) {
  ReportJson edges = ReportJson::array();
  ReportJson values = ReportJson::array();
  for (int k = 0; k < w.graph.edge_count(); ++k) {
    edges.push_back(ReportJson::array({w.graph.edge(k).u, w.graph.edge(k).v}));
    values.push_back(to_string(w.values[k]));
  }
  return ReportJson{{"edges", std::move(edges)}, {"values", std::move(values)}};
}

ReportJson stress_basis_json(const std::vector<Stress>& basis) {
  ReportJson vectors = ReportJson::array();
  for (const Stress& w : basis) {
    ReportJson values = ReportJson::array();
    for (const Rational& x : w.values) values.push_back(to_string(x));
    vectors.push_back(std::move(values));
  }
  return ReportJson{{"dimension", basis.size()}, {"vectors", std::move(vectors)}};
}

ReportJson psd_json(const PsdCertificate& psd) {
  ReportJson j;
  j["verdict"] = psd.psd ? "PSD" : "NotPSD";
  if (psd.psd) j["rank"] = psd.rank;
  ReportJson pivots = ReportJson::array();
  for (const auto& [index, value] : psd.pivots)
    pivots.push_back(ReportJson::array({index + 1, to_string(value)}));
  j["pivots"] = std::move(pivots);
  if (psd.violation) {
    ReportJson v;
    v["kind"] = psd.violation->kind == PsdViolation::Kind::NegativeDiagonal
                    ? "negative-pivot"
                    : "indefinite-2x2";
    ReportJson idx = ReportJson::array();
    for (int i : psd.violation->indices) idx.push_back(i + 1);
    v["principal_indices"] = std::move(idx);
    j["violation"] = std::move(v);
  }
  return j;
}

ReportJson certificate_json(const SuperStabilityCertificate& cert) {
  ReportJson j;
  switch (cert.verdict) {
    case CertifyVerdict::Certified: j["verdict"] = "Certified"; break;
    case CertifyVerdict::CompleteSimplex: j["verdict"] = "CompleteSimplex"; break;
    case CertifyVerdict::NotCertified: j["verdict"] = "NotCertified"; break;
  }
  j["affine_span"] = cert.span_dim;
  j["required_rank"] = cert.required_rank;
  if (cert.verdict == CertifyVerdict::NotCertified) {
    j["reason"] = reason_name(cert.reason);
    j["detail"] = cert.detail;
    j["note"] = "NotCertified is not a disproof of universal rigidity; the test is one-sided";
  }
  j["conic_at_infinity"] = cert.conic_free ? "none" : "witness";
  if (cert.stress) j["stress"] = stress_json(*cert.stress);
  if (cert.psd) j["psd"] = psd_json(*cert.psd);
  if (!cert.search_recipe.empty()) {
    j["search"] = ReportJson{{"recipe", cert.search_recipe}, {"seed", cert.seed}};
  }
  return j;
}

ReportJson lift_json(const LiftCertificate& lift) {
  ReportJson j;
  j["verdict"] = lift.certified ? "Certified" : "NotCertified";
  j["high_affine_span"] = lift.high_span;
  j["required_rank"] = lift.required_rank;
  if (!lift.certified) {
    j["failed_check"] = lift.failed_check;
    j["note"] = "NotCertified is not a disproof of universal rigidity; the test is one-sided";
  }
  if (lift.psd) j["psd"] = psd_json(*lift.psd);
  return j;
}

ReportJson convex_polygon_json(const ConvexPolygonReport& report) {
  ReportJson j;
  j["strictly_convex"] = report.strictly_convex;
  j["hull_edges_present"] = report.hull_edges_present;
  j["boundary_positive"] = report.boundary_positive;
  j["interior_negative"] = report.interior_negative;
  j["equilibrium"] = report.equilibrium;
  j["hypotheses_hold"] = report.hypotheses_hold;
  j["conclusion_psd_rank_n_minus_3"] = report.conclusion_psd;
  j["psd_rank"] = report.psd_rank_value;
  j["hull_cycle"] = report.hull_cycle;
  return j;
}

namespace {

ReportJson planar_json(const PlanarConfig& q) {
  ReportJson pts = ReportJson::array();
  char buf[64];
  for (const PlanarPoint& p : q) {
    std::snprintf(buf, sizeof(buf), "%.17g", p.x);
    std::string x = buf;
    std::snprintf(buf, sizeof(buf), "%.17g", p.y);
    pts.push_back(ReportJson::array({x, std::string(buf)}));
  }
  return pts;
}

}  // namespace

ReportJson witness_json(const FlexWitness& witness) {
  ReportJson j;
  j["removed"] = ReportJson::array({witness.removed.u, witness.removed.v});
  j["theta"] = witness.theta;
  j["branch"] = witness.flags.branch;
  j["sweep_positive"] = witness.flags.sweep_positive;
  j["max_edge_residual"] = witness.max_edge_residual;
  j["max_pair_distance_diff"] = witness.max_pair_dist_diff;
  j["configuration"] = planar_json(witness.config);
  return j;
}

ReportJson projection_json(const ProjectionSplit& split) {
  ReportJson j;
  auto config_json = [](const Configuration& c) {
    ReportJson pts = ReportJson::array();
    for (const Point& p : c.points) {
      ReportJson row = ReportJson::array();
      for (const Rational& x : p) row.push_back(to_string(x));
      pts.push_back(std::move(row));
    }
    return pts;
  };
  j["low_ambient"] = config_json(split.low.config);
  ReportJson heights = ReportJson::array();
  for (const Point& h : split.heights) {
    ReportJson row = ReportJson::array();
    for (const Rational& x : h) row.push_back(to_string(x));
    heights.push_back(std::move(row));
  }
  j["heights_ambient"] = std::move(heights);
  if (split.low_reduced) j["low"] = config_json(split.low_reduced->config);
  if (split.heights_reduced) {
    ReportJson hr = ReportJson::array();
    for (const Point& h : *split.heights_reduced) {
      ReportJson row = ReportJson::array();
      for (const Rational& x : h) row.push_back(to_string(x));
      hr.push_back(std::move(row));
    }
    j["heights"] = std::move(hr);
  }
  return j;
}

std::string report_to_text(const ReportJson& report) { return report.dump(2) + "\n"; }

}  // namespace rigidline
