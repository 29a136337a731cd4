#pragma once

#include <string>

#include "rigidline/framework.hpp"

namespace rigidline {

struct Stress;  // stress.hpp

/// Framework file schema (strict; unknown keys rejected):
///   {"dimension": d, "coordinates": [["a","b/c","0.25"],...], "edges": [[i,j],...]}
/// Coordinates are strings parsed exactly; edge order is canonicalized on load.
Framework load_framework(const std::string& path);
Framework framework_from_json_text(const std::string& text);

void save_framework(const Framework& f, const std::string& path);
std::string framework_to_json_text(const Framework& f);

/// Stress file schema: {"edges": [[i,j],...], "values": ["a/b",...]}.
/// Edges may come in any order and are resolved against the graph's canonical
/// order; unlisted edges carry zero stress.
Stress load_stress(const std::string& path, const Graph& graph);
Stress stress_from_json_text(const std::string& text, const Graph& graph);

void save_stress(const Stress& stress, const std::string& path);
std::string stress_to_json_text(const Stress& stress);

}  // namespace rigidline
