#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "subpoly/statpoly.hpp"
#include "subpoly/zonotope.hpp"

using namespace subpoly;

namespace {

StepKernel sym2(const Rat& a, const Rat& b, const Rat& c) {
    return StepKernel(2, {{a, b}, {b, c}});
}

}  // namespace

TEST_CASE("kernel validation") {
    CHECK_THROWS_AS(StepKernel(0, {}), std::invalid_argument);
    // Not symmetric.
    CHECK_THROWS_AS(StepKernel(2, {{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}), std::invalid_argument);
    // Entry outside [0,1].
    CHECK_THROWS_AS(StepKernel(1, {{Rat(2)}}), std::invalid_argument);
    // Wrong shape.
    CHECK_THROWS_AS(StepKernel(2, {{Rat(0)}}), std::invalid_argument);
    CHECK_NOTHROW(StepKernel(1, {{Rat(1) / 2}}));
}

TEST_CASE("edge density of a two-step kernel") {
    // All four vertex-pair assignments weighted equally.
    CHECK(p_eval(Graph::complete(2), sym2(Rat(1), Rat(1) / 2, Rat(0))) == Rat(1) / 2);
    Rat a(1, 3), b(1, 5), c(1, 7);
    CHECK(p_eval(Graph::complete(2), sym2(a, b, c)) == (a + 2 * b + c) / 4);
}

TEST_CASE("constant kernels") {
    Rat c(3, 7);
    for (const char* name : {"K2", "P3", "K3", "C4"}) {
        Graph f = Graph::parse(name);
        Rat expect = rat_pow(c, f.edge_count());
        CHECK(p_eval(f, StepKernel::constant(1, c)) == expect);
        CHECK(p_eval(f, StepKernel::constant(3, c)) == expect);
    }
    CHECK(p_eval(Graph::cycle(4), StepKernel::one(2)) == Rat(1));
    CHECK(p_eval(Graph::cycle(4), StepKernel::zero(2)) == Rat(0));
}

TEST_CASE("triangle density of a block kernel") {
    // w = [[0,1],[1,0]]: bipartite limit has no odd cycles but full C4 density
    // on balanced parts.
    StepKernel bip = sym2(Rat(0), Rat(1), Rat(0));
    CHECK(p_eval(Graph::complete(3), bip) == Rat(0));
    CHECK(p_eval(Graph::cycle(5), bip) == Rat(0));
    // C4 maps: both classes alternate, 2 of 16 class patterns survive.
    CHECK(p_eval(Graph::cycle(4), bip) == Rat(1) / 8);
}

TEST_CASE("blow up preserves densities") {
    StepKernel k = sym2(Rat(1) / 3, Rat(2) / 3, Rat(1) / 6);
    StepKernel k2 = blow_up(k, 3);
    CHECK(k2.steps == 6);
    for (const char* name : {"K2", "P3", "K3", "C4", "K4-e"}) {
        Graph f = Graph::parse(name);
        CHECK(p_eval(f, k) == p_eval(f, k2));
    }
}

TEST_CASE("density evaluation is symmetric under relabeling") {
    StepKernel k = sym2(Rat(1) / 2, Rat(1) / 4, Rat(3) / 4);
    Graph c4a = Graph::cycle(4);
    Graph c4b(4);
    c4b.add_edge(0, 2);
    c4b.add_edge(2, 1);
    c4b.add_edge(1, 3);
    c4b.add_edge(3, 0);
    CHECK(p_eval(c4a, k) == p_eval(c4b, k));
}

TEST_CASE("map-count guard") {
    // 40^6 > 5e6: too many vertex maps.
    StepKernel big = StepKernel::constant(40, Rat(1) / 2);
    CHECK_THROWS_AS(p_eval(Graph::complete(6), big), capacity_error);
}

TEST_CASE("sampling determinism and corner kernels") {
    GraphVector fs = GraphVector::parse("K3,C4");
    auto s1 = zonotope_sample(fs, 2, 8, 42);
    auto s2 = zonotope_sample(fs, 2, 8, 42);
    REQUIRE(s1.size() == 8);
    for (size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].point == s2[i].point);
    // Corners first: the zero and one kernels.
    CHECK(s1[0].point == Vec{Rat(0), Rat(0)});
    CHECK(s1[1].point == Vec{Rat(1), Rat(1)});
    // A different seed changes the random tail.
    auto s3 = zonotope_sample(fs, 2, 8, 43);
    bool differs = false;
    for (size_t i = 2; i < s1.size(); ++i)
        if (s1[i].point != s3[i].point) differs = true;
    CHECK(differs);
    // Every sample point is the exact density vector of its kernel.
    for (const auto& s : s1) {
        CHECK(s.point[0] == p_eval(fs[0], s.kernel));
        CHECK(s.point[1] == p_eval(fs[1], s.kernel));
    }
    CHECK_THROWS_AS(zonotope_sample(fs, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("sampled density vectors lie in the finite-level polytope") {
    CHECK(check_zonotope_in_polytope(GraphVector::parse("K2,K3"), 5, 2, 40, 7).pass());
    auto rep = check_zonotope_in_polytope(GraphVector::parse("K3,C4"), 6, 3, 25, 11);
    CHECK(rep.pass());
    CHECK(rep.instances.size() == 25);
}

TEST_CASE("full-dimensional witness simplex") {
    GraphVector fs = GraphVector::parse("K2,K3");
    auto w = full_dim_witness(fs, 2, 30, 5);
    REQUIRE(w.found);
    CHECK(w.simplex.size() == 3);
    CHECK(w.volume > 0);

    GraphVector fs3 = GraphVector::parse("K3,C4,K4-e");
    auto w3 = full_dim_witness(fs3, 2, 60, 5);
    REQUIRE(w3.found);
    CHECK(w3.simplex.size() == 4);
    CHECK(w3.volume > 0);
}

TEST_CASE("hull volume of samples is exact in low dimension and bounded") {
    GraphVector fs = GraphVector::parse("K2,K3");
    auto zv = zonotope_hull_volume(fs, 2, 50, 9);
    REQUIRE(zv.exact);
    CHECK(zv.volume > 0);
    // Inner approximation: never exceeds the finite-level polytope volume.
    auto P = build_polytope(fs, 6, PolyKind::density);
    CHECK(zv.volume <= exact_volume(P.hull).volume);

    // Determinism.
    auto zv2 = zonotope_hull_volume(fs, 2, 50, 9);
    CHECK(zv.volume == zv2.volume);
}

TEST_CASE("monte carlo volume estimates a known region") {
    // Left half of the unit square: exact deterministic run, estimate near 1/2.
    auto inside = [](const Vec& x) { return x[0] <= Rat(1) / 2; };
    std::vector<std::pair<Rat, Rat>> box = {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}};
    McVolume mc = monte_carlo_volume(inside, box, 4000, 77);
    CHECK(mc.samples == 4000);
    CHECK(mc.hits > 0);
    CHECK(mc.std_error > 0);
    CHECK(std::abs(mc.estimate - 0.5) < 5 * mc.std_error);
    // Same seed, same dyadic sample stream.
    McVolume again = monte_carlo_volume(inside, box, 4000, 77);
    CHECK(again.hits == mc.hits);
}

TEST_CASE("monte carlo route engages above dimension three") {
    GraphVector fs = GraphVector::parse("K2,P4,K3,C4");
    auto zv = zonotope_hull_volume(fs, 2, 40, 3, 2000);
    CHECK(!zv.exact);
    CHECK(zv.mc.samples == 2000);
    CHECK(zv.mc.hits <= zv.mc.samples);
    CHECK(zv.mc.estimate >= 0);
    // Deterministic rerun.
    auto zv2 = zonotope_hull_volume(fs, 2, 40, 3, 2000);
    CHECK(zv.mc.hits == zv2.mc.hits);
}

TEST_CASE("random graphs from a kernel estimate its densities") {
    // Fixed-seed sanity: the empirical triangle density over N samples from
    // G(m, W) stays within 4 standard errors of the exact kernel density.
    GraphVector fs = GraphVector::parse("K3");
    StepKernel k = sym2(Rat(1) / 4, Rat(3) / 4, Rat(1) / 2);
    double target = static_cast<double>(p_eval(fs[0], k));

    std::mt19937_64 rng(2718);
    const int m = 20;
    const int trials = 20000;
    Graph f = Graph::parse("K3");
    auto table = subgraph_count_table(f);
    Int max_copies = count_in_complete(f, m);
    double acc = 0, acc2 = 0;
    for (int t = 0; t < trials; ++t) {
        auto adj = sample_gnw(m, k, rng);
        double dens = static_cast<double>(count_subgraphs_in_host(f, table, adj)) /
                      static_cast<double>(max_copies);
        acc += dens;
        acc2 += dens * dens;
    }
    double mean = acc / trials;
    double var = std::max(acc2 / trials - mean * mean, 1e-12);
    double stderr_mean = std::sqrt(var / trials);
    CHECK(std::abs(mean - target) < 4 * stderr_mean + 1e-9);

    // Degenerate kernels produce the corresponding deterministic graphs.
    auto zero_adj = sample_gnw(6, StepKernel::zero(2), rng);
    for (auto row : zero_adj) CHECK(row == 0u);
    auto one_adj = sample_gnw(6, StepKernel::one(2), rng);
    for (int v = 0; v < 6; ++v) CHECK(__builtin_popcount(one_adj[v]) == 5);
}
