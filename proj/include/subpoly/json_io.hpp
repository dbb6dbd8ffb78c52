#pragma once

#include <map>
#include <string>

#include "subpoly/hull.hpp"
#include "subpoly/report.hpp"
#include "subpoly/statpoly.hpp"
#include "subpoly/zonotope.hpp"

namespace subpoly {

inline constexpr const char* tool_version = "0.1.0";

// Stable, reproducible JSON: keys in fixed order, rationals as "p/q" strings,
// no timestamps. Identical inputs serialize to identical bytes.

std::string polytope_json(const SubgraphPolytope& P, bool with_facets);
std::string report_json(const CheckReport& r);

std::string kernel_json(const StepKernel& k);
StepKernel kernel_from_json(const std::string& text);

// OFF mesh of a full-dimensional 3-polytope (vertices as decimals, facet
// cycles as index lists). Degenerate or non-3D input is rejected.
std::string export_off(const SubgraphPolytope& P);

// Run manifest: command, flags, seed, tool version. Deliberately no clock
// fields so reruns are byte-identical.
std::string manifest_json(const std::string& command,
                          const std::map<std::string, std::string>& params,
                          std::uint64_t seed);

}  // namespace subpoly
