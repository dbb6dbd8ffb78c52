#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subpoly/graph.hpp"
#include "subpoly/hull.hpp"
#include "subpoly/rational.hpp"
#include "subpoly/report.hpp"

namespace subpoly {

// Clique orders e_1 < ... < e_m, all >= 2, for the pattern family (K_{e_i}).
struct TailSpec {
    std::vector<int> orders;

    explicit TailSpec(std::vector<int> orders_);

    int dim() const { return static_cast<int>(orders.size()); }
    GraphVector to_graph_vector() const;
};

// Point on the tail curve: coordinate i is prod_{j=1}^{e_i - 1} (1 - j*x).
// At x = 1/k these are the limiting clique densities of balanced complete
// k-partite graphs; x = 0 gives the all-ones point.
Vec tail_point(const TailSpec& spec, const Rat& x);

// Conjectured limit region for clique orders (2,3): the convex hull of
// (0,0), (1,1) and the tail points at x = 1/k for k = 2..K. K >= 2.
VPolytope razborov_polygon(int K);

// Inclusions every finite level must satisfy:
//   (a) for orders (2,3), the vertices of razborov_polygon(10) lie in the
//       order-n density polytope for n = 3..n_max,
//   (b) tail points at x = 0 and x = 1/k, k = 1..10, lie in the order-n_max
//       density polytope,
//   (c) the sup-distance between the statistics of balanced complete
//       k-partite graphs and the tail point at 1/k never grows with n.
CheckReport check_limit_inclusions(const TailSpec& spec, int n_max);

// Empirical cyclic structure of the tail curve: for the given parameters the
// hull of the tail points should have every point extreme and (in dimension
// <= 3) facets given by Gale evenness on the parameter order.
CheckReport check_tail_cyclic(const TailSpec& spec, const std::vector<Rat>& xs);

// Clips a convex polygon (vertices in cycle order) to the half-plane
// <a, x> <= b. Exact; the result is again in cycle order.
std::vector<Vec> clip_polygon(const std::vector<Vec>& poly, const Vec& a, const Rat& b);

struct GapResult {
    CheckReport inclusion;   // tail generators inside the order-host_n polytope
    bool volumes_exact = false;
    Rat inner_volume;        // conv({1} u tail points), dim <= 3 only
    Rat outer_volume;        // order-host_n density polytope, dim <= 3 only
    int samples_inside = 0;  // sampled kernel density vectors vs the inner hull
    int samples_outside = 0;
    std::vector<Vec> candidates;  // limit points found outside the inner hull
    std::string trend;            // "consistent" | "inconclusive" (+ reason)
    // Area removed when the all-ones vertex is cut off by <(1,..,1), x> <= dim - delta,
    // per delta; dimension 2 only.
    std::vector<std::pair<Rat, Rat>> chop;
};

// Falsification harness for the conjectured limit region conv({1} u tail):
// sampled kernel densities (kernel sizes 2..4) are exact limit points, so any
// sample outside the inner hull is a candidate counterexample (the hull uses
// finitely many tail generators, so candidates still need asymptotic
// analysis, never a verdict). k_max >= 1; samples = 0 skips sampling.
GapResult conjecture_gap(const TailSpec& spec, int host_n, int k_max,
                         int samples, std::uint64_t seed);

}  // namespace subpoly
