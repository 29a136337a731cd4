// rigidline: equilibrium stresses, PSD stress-matrix certificates, projections
// and flex witnesses for bar-joint frameworks, with a gallery of line/plane
// constructions.
//
// Exit codes: 0 success or Certified; 1 soft negative (NotCertified, no
// witness found); 2 usage or input error; 3 internal inconsistency.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rigidline/framework_io.hpp"
#include "rigidline/gallery.hpp"
#include "rigidline/report.hpp"
#include "rigidline/rng.hpp"
#include "rigidline/svg.hpp"

namespace {

using namespace rigidline;

constexpr int kExitOk = 0;
constexpr int kExitSoftNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << text;
}

struct CommonOutputs {
  std::string json_path;
  std::string svg_path;
  bool timing = false;
};

void emit(const CommonOutputs& outputs, ReportJson& report,
          const std::chrono::steady_clock::time_point& started,
          const std::string& svg_text = {}) {
  if (outputs.timing) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    report["timing_ms"] = elapsed;
  }
  std::string text = report_to_text(report);
  if (!outputs.json_path.empty())
    spit(outputs.json_path, text);
  else
    std::cout << text;
  if (!outputs.svg_path.empty() && !svg_text.empty()) spit(outputs.svg_path, svg_text);
}

Vec parse_rational_csv(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_rational(part));
  if (out.empty()) throw Error(Errc::UsageError, "empty rational list");
  return out;
}

/// "a,b;c,d" -> rows of a matrix.
MatrixR parse_matrix(const std::string& text) {
  std::vector<Vec> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_rational_csv(row));
  return MatrixR::from_rows(rows);
}

Edge parse_edge(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(Errc::UsageError, "edge must be I,J");
  return Edge(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
}

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) order.push_back(std::stoi(part));
  return order;
}

int cmd_analyze(const std::string& path, const CommonOutputs& outputs) {
  auto started = std::chrono::steady_clock::now();
  std::string bytes = slurp(path);
  Framework f = framework_from_json_text(bytes);
  ReportJson report = report_header("analyze", path, bytes);
  report["framework"] = framework_summary(f);
  report["stress_basis"] = stress_basis_json(equilibrium_stress_basis(f));
  std::string svg = f.config.dim <= 2 ? render_svg(f, std::nullopt) : "";
  emit(outputs, report, started, svg);
  return kExitOk;
}

/// A Certified exit re-verifies equilibrium, PSD rank and the conic check
/// from scratch before reporting.
void reverify(const Framework& f, const SuperStabilityCertificate& cert) {
  if (!cert.certified()) return;
  if (!cert.stress) throw InternalInconsistency("certificate without a stress");
  if (!is_equilibrium(f, *cert.stress))
    throw InternalInconsistency("certified stress fails re-verification (equilibrium)");
  PsdCertificate psd = psd_rank(stress_matrix(f.graph, *cert.stress));
  if (!psd.psd || psd.rank != cert.required_rank)
    throw InternalInconsistency("certified stress fails re-verification (PSD rank)");
  if (conic_at_infinity(reduce_to_affine_span(f)))
    throw InternalInconsistency("certified framework fails re-verification (conic)");
}

int cmd_certify(const std::string& path, const std::string& stress_path,
                std::uint64_t seed, const CommonOutputs& outputs) {
  auto started = std::chrono::steady_clock::now();
  std::string bytes = slurp(path);
  Framework f = framework_from_json_text(bytes);
  std::optional<Stress> candidate;
  if (!stress_path.empty()) candidate = stress_from_json_text(slurp(stress_path), f.graph);

  SuperStabilityCertificate cert = certify_super_stable(f, candidate, seed);
  reverify(f, cert);

  ReportJson report = report_header("certify", path, bytes);
  report["framework"] = framework_summary(f);
  report["certificate"] = certificate_json(cert);
  std::string svg;
  if (f.config.dim <= 2)
    svg = render_svg(f, cert.stress ? cert.stress : candidate);
  emit(outputs, report, started, svg);
  if (cert.verdict == CertifyVerdict::NotCertified) {
    std::cerr << "not certified: " << cert.detail << " (not a disproof)\n";
    return kExitSoftNegative;
  }
  return kExitOk;
}

int cmd_lift(const std::string& low_path, const std::string& high_path,
             const std::string& stress_path, const CommonOutputs& outputs) {
  auto started = std::chrono::steady_clock::now();
  std::string low_bytes = slurp(low_path);
  Framework low = framework_from_json_text(low_bytes);
  Framework high = framework_from_json_text(slurp(high_path));
  Stress w = stress_from_json_text(slurp(stress_path), low.graph);

  LiftCertificate lift = certify_by_lift(low, high, w);
  ReportJson report = report_header("lift", low_path, low_bytes);
  report["low"] = framework_summary(low);
  report["high"] = framework_summary(high);
  report["lift"] = lift_json(lift);
  emit(outputs, report, started);
  if (!lift.certified) {
    std::cerr << "lift not certified: " << lift.failed_check << " (not a disproof)\n";
    return kExitSoftNegative;
  }
  return kExitOk;
}

int cmd_project(const std::string& path, int onto, const std::string& direction,
                const CommonOutputs& outputs) {
  auto started = std::chrono::steady_clock::now();
  std::string bytes = slurp(path);
  Framework f = framework_from_json_text(bytes);
  ProjectionSplit split = direction.empty()
                              ? project_orthogonal(f, onto)
                              : project_orthogonal(f, {parse_rational_csv(direction)});
  ReportJson report = report_header("project", path, bytes);
  report["framework"] = framework_summary(f);
  report["projection"] = projection_json(split);
  const Framework& low = split.low_reduced ? *split.low_reduced : split.low;
  report["low_framework"] = framework_summary(low);
  std::string svg = low.config.dim <= 2 ? render_svg(low, std::nullopt) : "";
  emit(outputs, report, started, svg);
  return kExitOk;
}

int cmd_flex(const std::string& path, const std::string& remove, int steps,
             const CommonOutputs& outputs) {
  auto started = std::chrono::steady_clock::now();
  std::string bytes = slurp(path);
  Framework f = framework_from_json_text(bytes);
  // default: the middle rung for the prism, the closing edge for a cycle
  Edge removed = remove.empty()
                     ? (f.graph.vertex_count() == 4 ? Edge(1, 4) : Edge(2, 5))
                     : parse_edge(remove);

  auto witness = find_alternate_realization(f, removed);
  ReportJson report = report_header("flex", path, bytes);
  report["framework"] = framework_summary(f);
  std::string svg;
  if (witness) {
    report["witness"] = witness_json(*witness);
    FlexPath path_frames = trace_flex(f, removed, witness->flags,
                                      steps > 0 ? steps : 12,
                                      std::abs(witness->theta));
    svg = render_svg(f, std::nullopt, path_frames);
  } else {
    report["witness"] = nullptr;
    report["note"] = "no witness found (not a proof of rigidity)";
  }
  emit(outputs, report, started, svg);
  if (!witness) {
    std::cerr << "no witness found (not a proof)\n";
    return kExitSoftNegative;
  }
  return kExitOk;
}

int cmd_gallery(const std::string& name, std::uint64_t seed, const std::string& order_text,
                const std::string& save_path, const std::string& save_stress_path,
                const CommonOutputs& outputs) {
  auto started = std::chrono::steady_clock::now();
  if (!is_gallery_name(name))
    throw Error(Errc::UsageError,
                "unknown gallery item '" + name +
                    "' (stretched-cycle, alternating-cycle, prism-2d, prism-line-ur, "
                    "prism-line-flex, orchard-ladder)");

  ReportJson report = report_header("gallery", name, name + ":" + std::to_string(seed));
  GalleryItem item;
  std::optional<FlexPath> overlay;
  int exit_code = kExitOk;

  if (name == "stretched-cycle") {
    item = stretched_cycle({Rational(0), Rational(1), Rational(3), Rational(6)});
    SuperStabilityCertificate cert = certify_super_stable(item.framework, item.stress, seed);
    report["certificate"] = certificate_json(cert);
  } else if (name == "alternating-cycle") {
    item = alternating_cycle(4, seed);
    SuperStabilityCertificate cert = certify_super_stable(item.framework, std::nullopt, seed);
    report["certificate"] = certificate_json(cert);
  } else if (name == "prism-2d") {
    item = prism_desargues_2d(seed);
    SuperStabilityCertificate cert = certify_super_stable(item.framework, item.stress, seed);
    report["certificate"] = certificate_json(cert);
  } else if (name == "prism-line-ur") {
    PrismLineUrResult result = prism_line_ur(seed);
    item = std::move(result.item);
    report["certificate"] = certificate_json(result.certificate);
    report["order"] = result.order;
  } else if (name == "prism-line-flex") {
    std::vector<int> order;
    if (!order_text.empty()) {
      order = parse_order(order_text);
    } else {
      order = prism_line_ur(seed).order;
    }
    PrismLineFlexibleResult result = prism_line_flexible(order, seed);
    item = std::move(result.item);
    FlexWitness w;
    w.config = result.witness;
    w.removed = result.removed;
    w.theta = result.theta;
    w.flags = result.flags;
    w.max_edge_residual = result.max_edge_residual;
    w.max_pair_dist_diff = result.max_pair_dist_diff;
    report["witness"] = witness_json(w);
    report["order"] = result.order;
    overlay = trace_flex(item.framework, result.removed, result.flags, 8,
                         std::abs(result.theta));
  } else {  // orchard-ladder
    OrchardLadderResult result = orchard_ladder(seed);
    item = std::move(result.item);
    report["certificate"] = certificate_json(result.certificate);
    report["projection_lift"] = lift_json(result.lift);
    report["projection"] = framework_summary(result.projection);
    if (!save_path.empty()) save_framework(result.projection, save_path + ".projection");
  }

  report["framework"] = framework_summary(item.framework);
  report["framework_file"] = ReportJson::parse(framework_to_json_text(item.framework));
  if (item.stress) report["stress_file"] = ReportJson::parse(stress_to_json_text(*item.stress));
  report["provenance"] = item.provenance;

  if (!save_path.empty()) save_framework(item.framework, save_path);
  if (!save_stress_path.empty()) {
    if (!item.stress)
      throw Error(Errc::UsageError, "gallery item has no distinguished stress to save");
    save_stress(*item.stress, save_stress_path);
  }

  std::string svg;
  if (item.framework.config.dim <= 2) svg = render_svg(item.framework, item.stress, overlay);
  emit(outputs, report, started, svg);
  return exit_code;
}

int cmd_affine(const std::string& path, const std::string& matrix_text,
               const std::string& translate_text, const CommonOutputs& outputs) {
  auto started = std::chrono::steady_clock::now();
  std::string bytes = slurp(path);
  Framework f = framework_from_json_text(bytes);
  AffineMap map;
  map.a = parse_matrix(matrix_text);
  map.b = translate_text.empty() ? Vec(map.a.rows(), Rational(0))
                                 : parse_rational_csv(translate_text);
  Framework image = apply_affine(f, map);
  ReportJson report = report_header("affine", path, bytes);
  report["framework"] = framework_summary(f);
  report["image"] = framework_summary(image);
  report["image_file"] = ReportJson::parse(framework_to_json_text(image));
  std::string svg = image.config.dim <= 2 ? render_svg(image, std::nullopt) : "";
  emit(outputs, report, started, svg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigidline: stress certificates, projections and flex witnesses "
               "for bar-joint frameworks"};
  app.require_subcommand(1);

  CommonOutputs outputs;
  app.add_option("--json", outputs.json_path, "write the report JSON to a file");
  app.add_option("--svg", outputs.svg_path, "write an SVG drawing to a file");
  app.add_flag("--timing", outputs.timing, "include wall time in the report");

  std::string file, stress_file, low_file, high_file, direction, remove, matrix_text,
      translate_text, name, order_text, save_path, save_stress_path;
  std::uint64_t seed = 0;
  int onto = 0, steps = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "summary, stress basis, rigidity flags");
  analyze->add_option("file", file)->required();

  CLI::App* certify = app.add_subcommand("certify", "super-stability certificate");
  certify->add_option("file", file)->required();
  certify->add_option("--stress", stress_file, "candidate stress file");
  certify->add_option("--seed", seed);

  CLI::App* lift = app.add_subcommand("lift", "certify LOW through a higher-dimensional HIGH");
  lift->add_option("low", low_file)->required();
  lift->add_option("high", high_file)->required();
  lift->add_option("--stress", stress_file)->required();

  CLI::App* project = app.add_subcommand("project", "orthogonal projection with exact split");
  project->add_option("file", file)->required();
  CLI::Option* onto_opt = project->add_option("--onto", onto, "first K coordinates");
  CLI::Option* dir_opt = project->add_option("--direction", direction, "a/b,c/d,... direction");
  onto_opt->excludes(dir_opt);

  CLI::App* flex = app.add_subcommand("flex", "search for a planar alternate realization");
  flex->add_option("file", file)->required();
  flex->add_option("--remove", remove, "rung to remove, I,J (default 2,5)");
  flex->add_option("--steps", steps, "frames for the SVG overlay");

  CLI::App* gallery = app.add_subcommand("gallery", "named constructions");
  gallery->add_option("name", name)->required();
  gallery->add_option("--seed", seed);
  gallery->add_option("--order", order_text, "vertex order for prism-line-flex");
  gallery->add_option("--save", save_path, "write the framework file");
  gallery->add_option("--save-stress", save_stress_path, "write the stress file");

  CLI::App* affine = app.add_subcommand("affine", "apply an affine map");
  affine->add_option("file", file)->required();
  affine->add_option("--matrix", matrix_text, "a,b;c,d rows")->required();
  affine->add_option("--translate", translate_text, "a,b,...");

  // --json/--svg/--timing are global; let them appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(file, outputs);
    if (*certify) return cmd_certify(file, stress_file, seed, outputs);
    if (*lift) return cmd_lift(low_file, high_file, stress_file, outputs);
    if (*project) {
      if (direction.empty() && onto < 1)
        throw Error(Errc::UsageError, "project needs --onto K or --direction");
      return cmd_project(file, onto, direction, outputs);
    }
    if (*flex) return cmd_flex(file, remove, steps, outputs);
    if (*gallery)
      return cmd_gallery(name, seed, order_text, save_path, save_stress_path, outputs);
    if (*affine) return cmd_affine(file, matrix_text, translate_text, outputs);
  } catch (const InternalInconsistency& e) {
    std::cerr << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error& e) {
    if (e.code() == Errc::SearchFailed) {
      std::cerr << e.what() << " (not a disproof)\n";
      return kExitSoftNegative;
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
