#pragma once

#include <optional>
#include <vector>

#include "subpoly/rational.hpp"

namespace subpoly {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);

Rat det(Mat m);  // Gaussian elimination over rationals; square input
int rank(Mat m);

// Dimension of the affine hull of the point set (rank of differences).
int affine_rank(const std::vector<Vec>& points);

// Indices of points forming an affine basis: first point plus affine_rank
// many others whose differences are linearly independent.
std::vector<int> affine_basis_indices(const std::vector<Vec>& points);

// Solves m x = rhs for square m; nullopt when singular.
std::optional<Vec> solve_linear(Mat m, Vec rhs);

// Nonzero normal of the hyperplane through d affinely independent points in
// dimension d; nullopt when the points are affinely dependent.
std::optional<Vec> hyperplane_normal(const std::vector<Vec>& points);

// "(a, b, c)" with exact rational components, for labels and logs.
std::string vec_str(const Vec& v);

}  // namespace subpoly
