#pragma once

#include <utility>
#include <vector>

#include "subpoly/linalg.hpp"

namespace subpoly {

// Linear constraint  a . x  (sense)  b,  sense one of '<' (<=), '>' (>=), '='.
struct LpConstraint {
    Vec a;
    char sense;
    Rat b;
};

struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status;
    Rat value;  // meaningful for optimal
    Vec x;      // meaningful for optimal
};

// Exact two-phase simplex with Bland's rule over free variables.
// Intended for small systems (a few thousand constraints at most).
LpResult lp_optimize(const Vec& objective, bool maximize,
                     const std::vector<LpConstraint>& constraints);

// Result of testing p against conv(points).
struct Membership {
    bool inside;
    // inside: sparse convex combination, pairs (point index, weight).
    std::vector<std::pair<int, Rat>> combination;
    // outside: exact separating functional with <c,p> > b >= <c,v> for all v.
    Vec c;
    Rat b;
};

// Convex-hull membership via phase-1 simplex on the combination variables;
// the separating certificate is read off the optimal dual values. Both
// branches are self-verified exactly before returning.
Membership membership(const Vec& p, const std::vector<Vec>& points);

// Indices i such that points[i] is a vertex of conv(points), i.e. lies outside
// the hull of the other points. Duplicate points are collapsed first; only the
// first occurrence can be reported extreme. One LP per candidate.
std::vector<int> extreme_point_indices(const std::vector<Vec>& points);

}  // namespace subpoly
