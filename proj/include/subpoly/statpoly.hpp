#pragma once

#include <string>
#include <vector>

#include "subpoly/graph.hpp"
#include "subpoly/hull.hpp"
#include "subpoly/lattice.hpp"
#include "subpoly/report.hpp"

namespace subpoly {

enum class PolyKind { density, lattice };

// Convex hull of the statistics vectors of all labeled graphs on n vertices:
// raw subgraph counts (lattice) or densities. Exhaustive and exact.
struct SubgraphPolytope {
    GraphVector Fs;
    int n;
    PolyKind kind;
    VPolytope hull;
    long long point_count_raw = 0;    // labeled graphs enumerated
    long long point_count_dedup = 0;  // distinct statistics vectors
};

// Enumerates all 2^C(n,2) labeled graphs, dedupes statistics vectors, and
// certifies the extreme ones. Capacity: n <= 7, at most 4 patterns.
SubgraphPolytope build_polytope(const GraphVector& fs, int n, PolyKind kind);

// F extended by isolated vertices to the given order. Deliberate helper for
// padding pattern vectors to equal order (changes the statistics semantics).
Graph pad_with_isolated(const Graph& f, int order);

// Every vertex of the density polytope at n_big must lie in the density
// polytope at n_small (host-size monotonicity).
CheckReport check_inclusion(const GraphVector& fs, int n_small, int n_big);
CheckReport check_inclusion(const SubgraphPolytope& small_poly,
                            const SubgraphPolytope& big_poly);

// For equal-order patterns: lattice-point counts of the two scaled lattice
// polytopes satisfy E_{n''}(C(n',n)k) <= E_{n'}(C(n'',n)k), and the scaled
// hulls nest. Verified by interpolated counts at k=1..4 plus LP inclusion.
CheckReport check_ehrhart_scaling(const GraphVector& fs, int n, int n1, int n2);

// Each coordinate inequality x_i >= 0 supports a facet of the density
// polytope, with the disjoint-union witness points on that face.
CheckReport check_nonneg_facets(const GraphVector& fs, int n);

}  // namespace subpoly
