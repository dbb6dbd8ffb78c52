#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "subpoly/hull.hpp"

using namespace subpoly;

namespace {

Vec v2(int a, int b) { return {Rat(a), Rat(b)}; }
Vec v3(int a, int b, int c) { return {Rat(a), Rat(b), Rat(c)}; }

std::vector<Vec> cube_points() {
    std::vector<Vec> pts;
    for (int m = 0; m < 8; ++m) pts.push_back(v3(m & 1, (m >> 1) & 1, (m >> 2) & 1));
    return pts;
}

}  // namespace

TEST_CASE("triangle facets and area") {
    VPolytope P = extreme_points({v2(0, 0), v2(1, 0), v2(3, 1)});
    CHECK(P.vertices.size() == 3);
    HullFacets hf = hull_facets(P);
    REQUIRE(!hf.degenerate);
    CHECK(hf.facets.size() == 3);
    for (const Facet& f : hf.facets) {
        CHECK(f.incident.size() == 2);
        // Every vertex satisfies the inequality, incident ones with equality.
        for (size_t i = 0; i < P.vertices.size(); ++i) {
            Rat lhs = 0;
            for (int k = 0; k < 2; ++k) lhs += f.normal[k] * P.vertices[i][k];
            CHECK(lhs <= f.offset);
            bool inc = std::find(f.incident.begin(), f.incident.end(), static_cast<int>(i)) !=
                       f.incident.end();
            CHECK((lhs == f.offset) == inc);
        }
    }
    CHECK(exact_volume(P).volume == Rat(1) / 2);
}

TEST_CASE("unit cube") {
    VPolytope P = extreme_points(cube_points());
    CHECK(P.vertices.size() == 8);
    HullFacets hf = hull_facets(P);
    REQUIRE(!hf.degenerate);
    CHECK(hf.facets.size() == 6);
    for (const Facet& f : hf.facets) CHECK(f.incident.size() == 4);
    CHECK(exact_volume(P).volume == Rat(1));

    // Interior and face-center points are filtered out.
    auto pts = cube_points();
    pts.push_back({Rat(1) / 2, Rat(1) / 2, Rat(1) / 2});
    pts.push_back({Rat(1) / 2, Rat(1) / 2, Rat(1)});
    CHECK(extreme_points(pts).vertices.size() == 8);
}

TEST_CASE("unit simplex and octahedron volumes") {
    VPolytope simplex = extreme_points({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
    CHECK(exact_volume(simplex).volume == Rat(1) / 6);
    CHECK(hull_facets(simplex).facets.size() == 4);

    std::vector<Vec> oct;
    for (int k = 0; k < 3; ++k)
        for (int s : {-1, 1}) {
            Vec v = v3(0, 0, 0);
            v[k] = Rat(s);
            oct.push_back(v);
        }
    VPolytope O = extreme_points(oct);
    CHECK(O.vertices.size() == 6);
    CHECK(hull_facets(O).facets.size() == 8);
    CHECK(exact_volume(O).volume == Rat(4) / 3);
}

TEST_CASE("degenerate inputs are reported, not projected") {
    // Four coplanar points in ambient dimension 3.
    VPolytope flat = extreme_points({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)});
    CHECK(flat.vertices.size() == 4);
    HullFacets hf = hull_facets(flat);
    CHECK(hf.degenerate);
    CHECK(hf.affine_dim == 2);
    CHECK(hf.affine_basis.size() == 3);
    auto vol = exact_volume(flat);
    CHECK(vol.degenerate);
    CHECK(vol.volume == Rat(0));

    // A single point.
    VPolytope pt = extreme_points({v2(3, 4)});
    CHECK(pt.vertices.size() == 1);
    CHECK(hull_facets(pt).degenerate);
    CHECK(hull_facets(pt).affine_dim == 0);
}

TEST_CASE("counterclockwise polygon order") {
    std::vector<Vec> pts = {v2(1, 1), v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2), v2(1, 0)};
    auto order = convex_polygon_order(pts);
    REQUIRE(order.size() == 4);  // mid-edge (1,0) and interior (1,1) dropped
    // Signed shoelace area is positive for counterclockwise order.
    Rat twice_area = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        const Vec& a = pts[order[i]];
        const Vec& b = pts[order[(i + 1) % order.size()]];
        twice_area += a[0] * b[1] - a[1] * b[0];
    }
    CHECK(twice_area == Rat(8));
}

TEST_CASE("hull route and LP route certify the same extreme sets") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Vec> pts;
        int count = 6 + static_cast<int>(rng() % 10);
        for (int i = 0; i < count; ++i)
            pts.push_back(v3(static_cast<int>(rng() % 7), static_cast<int>(rng() % 7),
                             static_cast<int>(rng() % 7)));
        auto a = hull_extreme_indices(pts);
        auto b = extreme_point_indices(pts);
        CHECK(std::set<int>(a.begin(), a.end()) == std::set<int>(b.begin(), b.end()));
    }
}

TEST_CASE("facet description is irredundant and complete on a random polytope") {
    std::mt19937_64 rng(5);
    std::vector<Vec> pts;
    for (int i = 0; i < 12; ++i)
        pts.push_back(v3(static_cast<int>(rng() % 9), static_cast<int>(rng() % 9),
                         static_cast<int>(rng() % 9)));
    VPolytope P = extreme_points(pts);
    HullFacets hf = hull_facets(P);
    REQUIRE(!hf.degenerate);
    for (const Facet& f : hf.facets) {
        REQUIRE(f.incident.size() >= 3);
        int tight = 0;
        for (size_t i = 0; i < P.vertices.size(); ++i) {
            Rat lhs = 0;
            for (int k = 0; k < 3; ++k) lhs += f.normal[k] * P.vertices[i][k];
            REQUIRE(lhs <= f.offset);
            if (lhs == f.offset) ++tight;
        }
        CHECK(tight == static_cast<int>(f.incident.size()));
    }
    // Every vertex lies on at least dim facets.
    for (size_t i = 0; i < P.vertices.size(); ++i) {
        int on = 0;
        for (const Facet& f : hf.facets)
            if (std::find(f.incident.begin(), f.incident.end(), static_cast<int>(i)) !=
                f.incident.end())
                ++on;
        CHECK(on >= 3);
    }
}
