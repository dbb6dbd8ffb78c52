#pragma once

#include <string>
#include <vector>

#include "subpoly/graph.hpp"
#include "subpoly/hull.hpp"
#include "subpoly/report.hpp"

namespace subpoly {

// Exponent list of a generalized moment curve p -> (p^{e_1},...,p^{e_d}),
// typically the edge counts of a pattern vector. Distinct positive integers,
// kept in the caller's coordinate order.
struct SpineSpec {
    std::vector<int> exponents;

    explicit SpineSpec(std::vector<int> es);
    int dim() const { return static_cast<int>(exponents.size()); }
    std::vector<int> sorted_desc() const;
};

Vec spine_point(const SpineSpec& spec, const Rat& p);

// Membership of the grid points p = j/grid, j = 0..grid, in the density
// polytope of the pattern vector (whose edge counts define the spine).
CheckReport check_spine_containment(const GraphVector& fs, int n, int grid);

// All size-d index subsets of {0..npoints-1} satisfying Gale's evenness
// condition, i.e. the predicted facets of a cyclic polytope with vertices
// in curve order.
std::vector<std::vector<int>> gale_evenness_facets(int npoints, int d);

struct CyclicPolytopeResult {
    VPolytope hull;                           // curve points in ascending-x order
    bool all_extreme = false;                 // every curve point is a vertex
    std::vector<std::vector<int>> gale_facets;  // predicted combinatorics
    bool facets_checked = false;              // brute-force comparison ran (dim <= 3)
    bool facets_match = false;
};

CyclicPolytopeResult cyclic_polytope_on_spine(const SpineSpec& spec,
                                              const std::vector<Rat>& xs);

// Exact volume of the cyclic polytope on the spine points x = i/n, i = 0..n,
// by the Gale triangulation determinant sum (cone from the origin; odd
// dimensions route through the vertex at x = 1).
Rat gale_volume_sum(const SpineSpec& spec, long n);

// Schur polynomial S_lambda(xs) as the semistandard-tableau sum; exact and
// well-defined at repeated arguments. lambda is padded with zeros to |xs|.
Rat schur_eval(const std::vector<int>& lambda, const std::vector<Rat>& xs);

// Bialternant form det[x_i^{lambda_j+k-j}] / det[x_i^{k-j}]; requires
// pairwise distinct arguments.
Rat schur_bialternant(const std::vector<int>& lambda, const std::vector<Rat>& xs);

// Partition for the spine-volume integrand: exponents sorted descending,
// lambda_i = e_i - (d - i), validated to be a partition.
std::vector<int> spine_partition(const SpineSpec& spec);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |64-node - 48-node|
};

// Numeric spine-hull volume: tensor Gauss-Legendre integration of the
// Schur x Vandermonde^4 integrand with the dimension-dependent prefactor.
QuadratureResult spine_volume_quadrature(const SpineSpec& spec);

// Closed-form spine-hull volume: 1/d! * prod_{i<j} (e_i-e_j)/(e_i+e_j)
// over descending exponents.
Rat pfaffian_product(const SpineSpec& spec);

// Pfaffian by first-row expansion; input must be exactly antisymmetric of
// even size <= 8. Pf(A)^2 = det(A) is verified internally.
Rat pfaffian_eval(const Mat& a);

// Three-way volume agreement: the subdivision determinant sum at the given
// resolution must lie within 5*(sum e_i)/subdivision of the product formula,
// and the quadrature within 1e-9 of it.
CheckReport check_volume_oracles(const SpineSpec& spec, long subdivision);

}  // namespace subpoly
