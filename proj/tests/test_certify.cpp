#include <algorithm>
#include <set>

#include "doctest.h"
#include "subpoly/certify.hpp"

using namespace subpoly;

TEST_CASE("polynomial parsing round trip") {
    SparsePolynomial q = SparsePolynomial::parse("1 - 16/3 x^3 + 11/2 x^4 - 1/2 x^5");
    REQUIRE(q.terms.size() == 4);
    CHECK(q.terms.at(0) == Rat(1));
    CHECK(q.terms.at(3) == Rat(-16) / 3);
    CHECK(q.terms.at(4) == Rat(11) / 2);
    CHECK(q.terms.at(5) == Rat(-1) / 2);
    CHECK(q.str() == "1 - 16/3 x^3 + 11/2 x^4 - 1/2 x^5");
    CHECK(SparsePolynomial::parse(q.str()).terms == q.terms);

    // A bare x, an omitted coefficient, merged duplicate exponents.
    SparsePolynomial r = SparsePolynomial::parse("x + 2x - 3/2 x^2");
    CHECK(r.terms.at(1) == Rat(3));
    CHECK(r.terms.at(2) == Rat(-3) / 2);

    // Cancelling terms vanish from the map.
    SparsePolynomial z = SparsePolynomial::parse("1 + x - x");
    CHECK(z.terms.size() == 1);
}

TEST_CASE("parse errors carry the offending position") {
    for (const char* bad : {"1 + x^", "", "1 +", "x x", "1/0", "^3"}) {
        CHECK_THROWS_WITH_AS(SparsePolynomial::parse(bad),
                             doctest::Contains("position"), std::invalid_argument);
    }
}

TEST_CASE("evaluation and grid minimum") {
    SparsePolynomial q = SparsePolynomial::parse("1 - 2x");
    CHECK(q.eval(Rat(0)) == Rat(1));
    CHECK(q.eval(Rat(1)) == Rat(-1));
    CHECK(q.eval(Rat(1) / 4) == Rat(1) / 2);
    SampleCheck sc = sample_check(q, 10);
    CHECK(sc.min_value == Rat(-1));
    CHECK(sc.argmin == Rat(1));
    CHECK_THROWS_AS(sample_check(q, 1), std::invalid_argument);

    SparsePolynomial v = SparsePolynomial::parse("1 - 4x + 4x^2");  // (1-2x)^2
    SampleCheck sv = sample_check(v, 8);
    CHECK(sv.min_value == Rat(0));
    CHECK(sv.argmin == Rat(1) / 2);
}

TEST_CASE("facet-derived certificate is confirmed with its tight vertices") {
    SparsePolynomial q = SparsePolynomial::parse("1 - 16/3 x^3 + 11/2 x^4 - 1/2 x^5");
    GraphVector fs = GraphVector::parse("K3,C4,K4-e");
    CertifyResult r = certify_nonneg(q, fs, 6);
    REQUIRE(r.status == CertStatus::certified);
    CHECK(r.min_value == Rat(0));
    REQUIRE(r.tight.size() == 3);

    auto P = build_polytope(fs, 6, PolyKind::density);
    std::set<std::vector<Rat>> tight_pts;
    for (int idx : r.tight) tight_pts.insert(P.hull.vertices[idx]);
    std::set<std::vector<Rat>> expect = {{Rat(1) / 4, Rat(1) / 15, Rat(1) / 15},
                                         {Rat(2) / 5, Rat(2) / 9, Rat(8) / 45},
                                         {Rat(1) / 2, Rat(1) / 3, Rat(1) / 3}};
    CHECK(tight_pts == expect);
}

TEST_CASE("strictly positive polynomial certifies with positive margin") {
    SparsePolynomial q = SparsePolynomial::parse("1 + x^3");
    CertifyResult r = certify_nonneg(q, GraphVector::parse("K3"), 4);
    CHECK(r.status == CertStatus::certified);
    CHECK(r.min_value == Rat(1));
    CHECK(r.tight.size() >= 1);
}

TEST_CASE("negative polynomial is refuted with a witness") {
    SparsePolynomial q = SparsePolynomial::parse("1 - 2x");
    CertifyResult r = certify_nonneg(q, GraphVector::parse("K2"), 4);
    REQUIRE(r.status == CertStatus::refuted);
    CHECK(r.refute_value < 0);
    CHECK(q.eval(r.refute_x) == r.refute_value);
    CHECK(r.refute_x == Rat(1));
}

TEST_CASE("relaxation gap leaves the verdict open") {
    // 1 - 2x + 6/5 x^3 is positive on [0,1] (minimum 1 - 4*sqrt(5)/9 > 0),
    // but its linearization dips to -1/3 at the vertex (2/3, 0).
    SparsePolynomial q = SparsePolynomial::parse("1 - 2x + 6/5 x^3");
    CertifyResult r = certify_nonneg(q, GraphVector::parse("K2,K3"), 3);
    REQUIRE(r.status == CertStatus::inconclusive);
    CHECK(r.min_value < 0);
    CHECK(!r.message.empty());
}

TEST_CASE("certificate input validation") {
    // Constant term must be exactly 1.
    CHECK_THROWS_AS(certify_nonneg(SparsePolynomial::parse("2 - x"),
                                   GraphVector::parse("K2"), 3),
                    std::invalid_argument);
    // Every non-constant exponent must match some pattern edge count.
    CHECK_THROWS_AS(certify_nonneg(SparsePolynomial::parse("1 - x^7"),
                                   GraphVector::parse("K2,K3"), 3),
                    std::invalid_argument);
    // Patterns with equal edge counts leave exponents ambiguous.
    CHECK_THROWS_AS(certify_nonneg(SparsePolynomial::parse("1 - x^3"),
                                   GraphVector::parse("K3,P4"), 4),
                    std::invalid_argument);
    // Lattice polytopes are not a certificate domain.
    auto L = build_polytope(GraphVector::parse("K2"), 3, PolyKind::lattice);
    CHECK_THROWS_AS(certify_nonneg(SparsePolynomial::parse("1 - x"), L),
                    std::invalid_argument);
}

TEST_CASE("facet duals") {
    // Facet -x <= -1/2 (i.e. x >= 1/2): c = -a/b = -2, and since b < 0 the
    // functional 1 + <c,x> is <= 0 on the polytope side... direction recorded.
    Facet f{{Rat(-1)}, Rat(-1) / 2, {}};
    FacetDual d = facet_dual(f);
    CHECK(d.c == Vec{Rat(-2)});
    CHECK(!d.bounds_below);

    Facet g{{Rat(2), Rat(-3)}, Rat(4), {}};
    FacetDual dg = facet_dual(g);
    CHECK(dg.c == Vec{Rat(-1) / 2, Rat(3) / 4});
    CHECK(dg.bounds_below);

    Facet through_origin{{Rat(1)}, Rat(0), {}};
    CHECK_THROWS_AS(facet_dual(through_origin), std::invalid_argument);

    SparsePolynomial q = dual_polynomial(dg, GraphVector::parse("K2,K3"));
    CHECK(q.terms.at(0) == Rat(1));
    CHECK(q.terms.at(1) == Rat(-1) / 2);
    CHECK(q.terms.at(3) == Rat(3) / 4);
}

TEST_CASE("every positive-offset facet round-trips through its dual") {
    GraphVector fs = GraphVector::parse("K2,K3");
    auto P = build_polytope(fs, 3, PolyKind::density);
    auto hf = hull_facets(P.hull);
    REQUIRE(!hf.degenerate);
    int tested = 0;
    for (const Facet& f : hf.facets) {
        if (f.offset <= 0) continue;
        FacetDual d = facet_dual(f);
        CHECK(d.bounds_below);
        SparsePolynomial q = dual_polynomial(d, fs);
        CertifyResult r = certify_nonneg(q, P);
        CHECK(r.status == CertStatus::certified);
        CHECK(r.min_value == Rat(0));
        // The tight vertices are exactly the facet's incident vertices.
        std::set<int> tight(r.tight.begin(), r.tight.end());
        std::set<int> incident(f.incident.begin(), f.incident.end());
        CHECK(tight == incident);
        ++tested;
    }
    CHECK(tested >= 1);
}

TEST_CASE("a level-6 facet dual reproduces the flagship certificate") {
    GraphVector fs = GraphVector::parse("K3,C4,K4-e");
    auto P = build_polytope(fs, 6, PolyKind::density);
    auto hf = hull_facets(P.hull);
    REQUIRE(!hf.degenerate);
    bool found = false;
    for (const Facet& f : hf.facets) {
        if (f.offset == 0) continue;
        SparsePolynomial q = dual_polynomial(facet_dual(f), fs);
        if (q.str() == "1 - 16/3 x^3 + 11/2 x^4 - 1/2 x^5") found = true;
    }
    CHECK(found);
}
