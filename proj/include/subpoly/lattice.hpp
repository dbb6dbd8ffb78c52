#pragma once

#include <vector>

#include "subpoly/hull.hpp"

namespace subpoly {

struct EhrhartPoly {
    std::vector<Rat> coeffs;  // ascending degree

    Rat eval(const Rat& k) const {
        Rat v = 0;
        for (size_t i = coeffs.size(); i-- > 0;) v = v * k + coeffs[i];
        return v;
    }
};

VPolytope dilate(const VPolytope& P, const Rat& factor);

// Number of integer points in kP. Vertices must be integral; ambient dim <= 3.
// Non-full-dimensional polytopes are handled (scan + exact membership).
Int count_lattice_points(const VPolytope& P, long k);

// Interpolate the lattice-point count at the first affine_dim+1 of `ks` and
// verify the fit on every remaining k (or on max+1 when none are left over).
// A verification miss means a counting bug, so it throws.
EhrhartPoly fit_ehrhart(const VPolytope& P, const std::vector<long>& ks);

// "8k^2+6k+1" style rendering with exact rational coefficients.
std::string ehrhart_str(const EhrhartPoly& poly, const std::string& var = "k");

}  // namespace subpoly
