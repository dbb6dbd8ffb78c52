#include <algorithm>
#include <set>

#include "doctest.h"
#include "subpoly/limits.hpp"
#include "subpoly/statpoly.hpp"

using namespace subpoly;

TEST_CASE("tail spec validation") {
    CHECK_THROWS_AS(TailSpec({}), std::invalid_argument);
    CHECK_THROWS_AS(TailSpec({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(TailSpec({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(TailSpec({2, 2}), std::invalid_argument);
    TailSpec ok({2, 3, 4});
    CHECK(ok.dim() == 3);
    GraphVector fs = ok.to_graph_vector();
    CHECK(fs[0] == Graph::complete(2));
    CHECK(fs[2] == Graph::complete(4));
}

TEST_CASE("tail point values") {
    TailSpec spec({2, 3});
    CHECK(tail_point(spec, Rat(0)) == Vec{Rat(1), Rat(1)});
    // x = 1/2: the two-part limit kills triangles.
    CHECK(tail_point(spec, Rat(1) / 2) == Vec{Rat(1) / 2, Rat(0)});
    // x = 1/5: (4/5, 4/5 * 3/5).
    CHECK(tail_point(spec, Rat(1) / 5) == Vec{Rat(4) / 5, Rat(12) / 25});
    // x = 1/k at coordinate e gives zero once k < e.
    TailSpec spec4({2, 3, 4});
    Vec p = tail_point(spec4, Rat(1) / 2);
    CHECK(p[1] == 0);
    CHECK(p[2] == 0);
    CHECK_THROWS_AS(tail_point(spec, Rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(tail_point(spec, Rat(-1) / 2), std::invalid_argument);
}

TEST_CASE("limit region polygon") {
    VPolytope tri = razborov_polygon(2);
    CHECK(tri.vertices.size() == 3);
    std::set<std::vector<Rat>> vs(tri.vertices.begin(), tri.vertices.end());
    CHECK(vs.count({Rat(0), Rat(0)}) == 1);
    CHECK(vs.count({Rat(1), Rat(1)}) == 1);
    CHECK(vs.count({Rat(1) / 2, Rat(0)}) == 1);

    // All K generators are extreme: K-1 tail points plus (0,0) and (1,1).
    VPolytope big = razborov_polygon(10);
    CHECK(big.vertices.size() == 11);

    // Monotone nesting: each polygon contains the previous one.
    for (int k = 3; k <= 8; ++k) {
        VPolytope prev = razborov_polygon(k - 1);
        VPolytope cur = razborov_polygon(k);
        for (const Vec& v : prev.vertices) CHECK(membership(v, cur).inside);
    }
    CHECK_THROWS_AS(razborov_polygon(1), std::invalid_argument);
}

TEST_CASE("finite levels contain the limit generators") {
    CHECK(check_limit_inclusions(TailSpec({2, 3}), 6).pass());
    auto rep = check_limit_inclusions(TailSpec({2, 4}), 5);
    CHECK(rep.pass());
}

TEST_CASE("tail curve behaves cyclically") {
    std::vector<Rat> xs;
    for (int k = 1; k <= 6; ++k) xs.push_back(Rat(1) / k);
    CHECK(check_tail_cyclic(TailSpec({2, 3}), xs).pass());

    std::vector<Rat> xs7;
    for (int k = 1; k <= 7; ++k) xs7.push_back(Rat(1) / k);
    CHECK(check_tail_cyclic(TailSpec({2, 3, 4}), xs7).pass());
}

TEST_CASE("polygon clipping") {
    std::vector<Vec> square = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)},
                               {Rat(0), Rat(1)}};
    // Cut the corner beyond x + y <= 3/2: removes a triangle of area 1/8.
    auto clipped = clip_polygon(square, {Rat(1), Rat(1)}, Rat(3) / 2);
    CHECK(clipped.size() == 5);
    Rat twice_area = 0;
    for (size_t i = 0; i < clipped.size(); ++i) {
        const Vec& a = clipped[i];
        const Vec& b = clipped[(i + 1) % clipped.size()];
        twice_area += a[0] * b[1] - a[1] * b[0];
    }
    CHECK(twice_area == Rat(7) / 4);

    // No-op cut and empty cut.
    CHECK(clip_polygon(square, {Rat(1), Rat(0)}, Rat(2)).size() == 4);
    CHECK(clip_polygon(square, {Rat(1), Rat(0)}, Rat(-1)).empty());
}

TEST_CASE("falsification harness on the (2,3) conjecture") {
    GapResult g = conjecture_gap(TailSpec({2, 3}), 5, 7, 9, 123);
    CHECK(g.inclusion.pass());
    REQUIRE(g.volumes_exact);
    CHECK(g.inner_volume > 0);
    CHECK(g.inner_volume <= g.outer_volume);
    CHECK(g.samples_inside + g.samples_outside >= 9);
    CHECK(g.samples_outside == static_cast<int>(g.candidates.size()));
    CHECK((g.trend == "consistent" || g.trend.rfind("inconclusive", 0) == 0));
    // The chop areas shrink with delta.
    REQUIRE(g.chop.size() >= 2);
    for (size_t i = 1; i < g.chop.size(); ++i) {
        CHECK(g.chop[i].first < g.chop[i - 1].first);    // deltas decrease
        CHECK(g.chop[i].second <= g.chop[i - 1].second);  // areas shrink
    }
    for (auto& [delta, area] : g.chop) CHECK(area > 0);

    // Deterministic reruns.
    GapResult g2 = conjecture_gap(TailSpec({2, 3}), 5, 7, 9, 123);
    CHECK(g2.samples_inside == g.samples_inside);
    CHECK(g2.inner_volume == g.inner_volume);
}

TEST_CASE("harness edge cases") {
    // Single tail generator and no sampling.
    GapResult g = conjecture_gap(TailSpec({2, 3}), 4, 1, 0, 9);
    CHECK(g.inclusion.pass());
    CHECK(g.samples_inside == 0);
    CHECK(g.samples_outside == 0);
    CHECK_THROWS_AS(conjecture_gap(TailSpec({2, 3}), 4, 0, 0, 9), std::invalid_argument);
}

TEST_CASE("density polytope volumes shrink with host size") {
    GraphVector fs = GraphVector::parse("K2,K3");
    Rat prev = -1;
    for (int n = 3; n <= 6; ++n) {
        auto P = build_polytope(fs, n, PolyKind::density);
        Rat vol = exact_volume(P.hull).volume;
        CHECK(vol > 0);
        if (prev >= 0) CHECK(vol <= prev);
        prev = vol;
    }
}
