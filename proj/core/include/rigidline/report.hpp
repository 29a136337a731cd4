#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rigidline/certificates.hpp"
#include "rigidline/flex.hpp"
#include "rigidline/transforms.hpp"

namespace rigidline {

using ReportJson = nlohmann::ordered_json;

/// FNV-1a over raw bytes; stable across platforms and runs.
std::string fnv1a_digest(const std::string& bytes);

/// Report skeleton: {"schema": "rigidline/1", "command": ..., "input": ...}.
/// Key order is fixed so identical inputs and seeds give identical bytes.
ReportJson report_header(const std::string& command, const std::string& input_name,
                         const std::string& input_bytes);

ReportJson framework_summary(const Framework& f);
ReportJson stress_basis_json(const std::vector<Stress>& basis);
ReportJson stress_json(const Stress& w);
ReportJson psd_json(const PsdCertificate& psd);
ReportJson certificate_json(const SuperStabilityCertificate& cert);
ReportJson lift_json(const LiftCertificate& lift);
ReportJson convex_polygon_json(const ConvexPolygonReport& report);
ReportJson witness_json(const FlexWitness& witness);
ReportJson projection_json(const ProjectionSplit& split);

std::string report_to_text(const ReportJson& report);

}  // namespace rigidline
