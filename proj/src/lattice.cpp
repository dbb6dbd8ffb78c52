#include "subpoly/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "subpoly/linalg.hpp"
#include "subpoly/rational.hpp"

namespace subpoly {

namespace {

Int floor_int(const Rat& r) {
    Int q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
    if (r < 0 && q * Int(boost::multiprecision::denominator(r)) != boost::multiprecision::numerator(r))
        --q;
    return q;
}

Int ceil_int(const Rat& r) { return -floor_int(-r); }

}  // namespace

VPolytope dilate(const VPolytope& P, const Rat& factor) {
    VPolytope Q = P;
    for (Vec& v : Q.vertices)
        for (Rat& x : v) x *= factor;
    return Q;
}

Int count_lattice_points(const VPolytope& P, long k) {
    if (P.vertices.empty())
        throw std::invalid_argument("count_lattice_points: empty polytope");
    if (k < 1) throw std::invalid_argument("count_lattice_points: dilation must be >= 1");
    int d = P.dim;
    if (d < 1 || d > 3)
        throw capacity_error("count_lattice_points: ambient dimension must be 1, 2 or 3");
    for (const Vec& v : P.vertices)
        for (const Rat& x : v)
            if (boost::multiprecision::denominator(x) != 1)
                throw std::invalid_argument("count_lattice_points: vertices must be integral");

    VPolytope Q = dilate(P, Rat(k));

    // Bounding box of kP.
    std::vector<Int> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        Rat mn = Q.vertices[0][j], mx = mn;
        for (const Vec& v : Q.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_int(mn);
        hi[j] = floor_int(mx);
    }

    // Full-dimensional polytopes scan against facet inequalities; degenerate
    // ones fall back to one exact membership LP per candidate point.
    std::vector<Facet> facets;
    bool full_dim = affine_rank(Q.vertices) == d;
    if (full_dim) facets = hull_facets(Q).facets;

    auto contains = [&](const Vec& p) {
        if (full_dim) {
            for (const Facet& f : facets)
                if (dot(f.normal, p) > f.offset) return false;
            return true;
        }
        return membership(p, Q.vertices).inside;
    };

    Int count = 0;
    std::vector<Int> cur(lo);
    Vec p(d);
    while (true) {
        for (int j = 0; j < d; ++j) p[j] = Rat(cur[j]);
        if (contains(p)) ++count;
        int j = d - 1;
        while (j >= 0 && cur[j] == hi[j]) {
            cur[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++cur[j];
    }
    return count;
}

EhrhartPoly fit_ehrhart(const VPolytope& P, const std::vector<long>& ks) {
    int D = affine_rank(P.vertices);
    std::vector<long> uniq(ks);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (static_cast<int>(uniq.size()) < D + 1)
        throw std::invalid_argument("fit_ehrhart: need at least affine_dim+1 distinct dilations");
    for (long k : uniq)
        if (k < 1) throw std::invalid_argument("fit_ehrhart: dilations must be positive");

    // Vandermonde fit of degree <= D on the first D+1 dilations.
    Mat A;
    Vec rhs;
    for (int i = 0; i <= D; ++i) {
        Vec row(D + 1);
        Rat p = 1;
        for (int j = 0; j <= D; ++j) {
            row[j] = p;
            p *= uniq[i];
        }
        A.push_back(std::move(row));
        rhs.push_back(Rat(Int(count_lattice_points(P, uniq[i]))));
    }
    auto sol = solve_linear(A, rhs);
    if (!sol) throw std::logic_error("fit_ehrhart: singular interpolation system");
    EhrhartPoly poly{*sol};

    // Held-out verification: every unused input dilation, or max+1 if none.
    std::vector<long> held(uniq.begin() + D + 1, uniq.end());
    if (held.empty()) held.push_back(uniq.back() + 1);
    for (long k : held) {
        Int expect = count_lattice_points(P, k);
        if (poly.eval(Rat(k)) != Rat(expect))
            throw std::logic_error("fit_ehrhart: held-out dilation mismatch (counting bug)");
    }
    return poly;
}

std::string ehrhart_str(const EhrhartPoly& poly, const std::string& var) {
    std::string s;
    for (std::size_t i = poly.coeffs.size(); i-- > 0;) {
        const Rat& c = poly.coeffs[i];
        if (c == 0 && !(i == 0 && s.empty())) continue;
        if (!s.empty()) s += c < 0 ? "-" : "+";
        else if (c < 0) s += "-";
        Rat a = abs(c);
        if (a != 1 || i == 0) s += rat_str(a);
        if (i >= 1) {
            s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace subpoly
