#pragma once

#include <string>
#include <vector>

#include "subpoly/lp.hpp"

namespace subpoly {

// Convex polytope in vertex representation. `vertices` is deduplicated and
// every entry is extreme (LP-certified by the constructors in this module).
struct VPolytope {
    int dim = 0;  // ambient dimension
    std::vector<Vec> vertices;
    // Optional per-vertex annotations (graph6 strings of witness graphs).
    std::vector<std::vector<std::string>> witnesses;
};

struct Facet {
    Vec normal;  // outward: <normal, x> <= offset on the polytope
    Rat offset;
    std::vector<int> incident;  // vertex indices; 2D/3D: in boundary cycle order
};

struct HullFacets {
    bool degenerate = false;
    int affine_dim = 0;                 // set when degenerate
    std::vector<int> affine_basis;      // vertex indices spanning the affine hull
    std::vector<Facet> facets;
};

struct VolumeResult {
    Rat volume;
    bool degenerate = false;
};

// Vertex set of conv(points): LP-certified extreme points, duplicates removed.
VPolytope extreme_points(const std::vector<Vec>& points);
VPolytope extreme_points(const std::vector<Vec>& points,
                         const std::vector<std::vector<std::string>>& witnesses);

Membership membership(const Vec& p, const VPolytope& P);

// Complete irredundant facet description; ambient dimension <= 3. Inputs whose
// affine hull is lower-dimensional are reported, never silently projected.
HullFacets hull_facets(const VPolytope& P);

// Exact volume by fan triangulation from a vertex over facet triangulations;
// ambient dimension <= 3. Degenerate input yields 0 with the flag set.
VolumeResult exact_volume(const VPolytope& P);

// Indices of the extreme points of a planar point set in counterclockwise
// boundary order (interior and mid-edge points dropped).
std::vector<int> convex_polygon_order(const std::vector<Vec>& pts);

// Extreme-point indices of an arbitrary exact point set, computed by convex
// hull in ambient dimension <= 3. Lower-dimensional sets fall back to the LP
// certification route. Duplicate points: first occurrence wins.
std::vector<int> hull_extreme_indices(const std::vector<Vec>& points);

}  // namespace subpoly
