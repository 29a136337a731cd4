#pragma once

#include <optional>
#include <string>

#include "rigidline/flex.hpp"
#include "rigidline/stress.hpp"

namespace rigidline {

struct SvgStyle {
  double width = 640.0;
  double height = 360.0;
  double margin = 40.0;
};

/// Deterministic SVG 1.1 drawing of a framework in dimension 1 or 2.
/// On the line, edges are circular arcs alternating above and below so the
/// connections stay visible; in the plane they are straight segments.
/// Positive-stress edges are dashed, negative solid, zero-stress thin gray.
/// An optional flex path is overlaid as fading ghost poses.
std::string render_svg(const Framework& f, const std::optional<Stress>& stress,
                       const std::optional<FlexPath>& path = std::nullopt,
                       const SvgStyle& style = {});

}  // namespace rigidline
