#ifndef BANDGRAPH_SVG_HPP
#define BANDGRAPH_SVG_HPP

#include <string>

#include "bandgraph/geometry.hpp"

namespace bandgraph {

/// Deterministic SVG: the configuration's lines clipped to a viewport, the
/// inner/outer regions (vertical band lines or circles), red dots on edge
/// intersections and blue squares on non-edge intersections.
std::string render_svg(const Configuration& cfg, const Graph& g, const Scalar& r_in,
                       const Scalar& r_out, RegionKind kind);

/// Real-plane schematic of the pentagram behind the complex G6 arrangement.
std::string render_g6_schematic_svg();

void write_file(const std::string& path, const std::string& content);

}  // namespace bandgraph

#endif
