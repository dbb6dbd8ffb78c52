#include "subpoly/statpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "subpoly/linalg.hpp"
#include "subpoly/lp.hpp"

namespace subpoly {

namespace {

// Up to 8 labeled-graph witnesses per distinct statistics vector.
struct WitnessEntry {
    std::uint32_t wit[8];
    std::uint8_t nw = 0;
};

}  // namespace

Graph pad_with_isolated(const Graph& f, int order) {
    if (order < f.n())
        throw std::invalid_argument("pad_with_isolated: order below pattern order");
    Graph g(order);
    for (int b = 1; b < f.n(); ++b)
        for (int a = 0; a < b; ++a)
            if (f.has_edge(a, b)) g.add_edge(a, b);
    return g;
}

SubgraphPolytope build_polytope(const GraphVector& fs, int n, PolyKind kind) {
    if (n < 1) throw std::invalid_argument("build_polytope: host size must be positive");
    if (fs.max_order() > n)
        throw std::invalid_argument("build_polytope: pattern larger than host");
    if (n > 7) throw capacity_error("build_polytope: host size capped at 7");
    int d = fs.size();
    if (d > 4) throw capacity_error("build_polytope: at most 4 patterns");

    const int nbits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t(1) << nbits;

    // Statistics by the subset identity: t^L(F,G) is the sum of t^L(F,G[S])
    // over the |F|-subsets S. Patterns of equal order share subset unpacking.
    struct Group {
        int k = 0, npairs = 0, nsub = 0;
        std::vector<int> host_bits;  // nsub * npairs host edge-bit positions
        std::vector<const std::vector<long long>*> tables;
        std::vector<int> members;
    };
    std::vector<std::vector<long long>> tables(d);
    std::map<int, Group> groups;
    for (int i = 0; i < d; ++i) {
        tables[i] = subgraph_count_table(fs[i]);
        Group& g = groups[fs[i].n()];
        g.k = fs[i].n();
        g.members.push_back(i);
        g.tables.push_back(&tables[i]);
    }
    for (auto& [k, g] : groups) {
        g.npairs = k * (k - 1) / 2;
        std::vector<int> subset(k);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            int idx = 0;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) subset[idx++] = v;
            for (int b = 1; b < k; ++b)
                for (int a = 0; a < b; ++a)
                    g.host_bits.push_back(Graph::edge_index(subset[a], subset[b]));
            ++g.nsub;
        }
    }

    std::unordered_map<std::uint64_t, WitnessEntry> seen;
    seen.reserve(std::min<std::uint64_t>(total, 1u << 16));
    std::vector<long long> counts(d);
    for (std::uint64_t m = 0; m < total; ++m) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& [k, g] : groups) {
            const int* hb = g.host_bits.data();
            for (int s = 0; s < g.nsub; ++s, hb += g.npairs) {
                std::uint32_t local = 0;
                for (int t = 0; t < g.npairs; ++t)
                    local |= std::uint32_t((m >> hb[t]) & 1) << t;
                for (std::size_t mi = 0; mi < g.members.size(); ++mi)
                    counts[g.members[mi]] += (*g.tables[mi])[local];
            }
        }
        std::uint64_t key = 0;
        for (int i = 0; i < d; ++i) key = key << 16 | std::uint64_t(counts[i]);
        WitnessEntry& e = seen[key];
        if (e.nw < 8) e.wit[e.nw++] = std::uint32_t(m);
    }

    // Canonical point order for reproducible vertex lists and witnesses.
    std::vector<std::pair<std::uint64_t, WitnessEntry>> entries(seen.begin(), seen.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Vec denom(d);
    for (int i = 0; i < d; ++i) denom[i] = Rat(count_in_complete(fs[i], n));

    std::vector<Vec> pts;
    std::vector<std::vector<std::string>> wits;
    pts.reserve(entries.size());
    wits.reserve(entries.size());
    for (const auto& [key0, e] : entries) {
        std::uint64_t key = key0;
        Vec v(d);
        for (int i = d - 1; i >= 0; --i) {
            long long c = static_cast<long long>(key & 0xFFFF);
            key >>= 16;
            v[i] = kind == PolyKind::density ? Rat(c) / denom[i] : Rat(c);
        }
        std::vector<std::string> w;
        for (int t = 0; t < e.nw; ++t)
            w.push_back(Graph::from_edge_mask(n, e.wit[t]).to_graph6());
        pts.push_back(std::move(v));
        wits.push_back(std::move(w));
    }

    // LP certification per candidate for the typical few-hundred-point case;
    // exact hull corners when enumeration leaves many distinct points.
    std::vector<int> ext = (d <= 3 && pts.size() > 2048) ? hull_extreme_indices(pts)
                                                         : extreme_point_indices(pts);
    std::sort(ext.begin(), ext.end(), [&](int a, int b) { return pts[a] < pts[b]; });

    VPolytope hull;
    hull.dim = d;
    for (int i : ext) {
        hull.vertices.push_back(pts[i]);
        hull.witnesses.push_back(wits[i]);
    }

    return SubgraphPolytope{fs, n, kind, std::move(hull),
                            static_cast<long long>(total),
                            static_cast<long long>(entries.size())};
}

CheckReport check_inclusion(const SubgraphPolytope& small_poly,
                            const SubgraphPolytope& big_poly) {
    if (small_poly.kind != PolyKind::density || big_poly.kind != PolyKind::density)
        throw std::invalid_argument("check_inclusion: density polytopes only");
    if (small_poly.Fs.names() != big_poly.Fs.names())
        throw std::invalid_argument("check_inclusion: pattern vectors differ");
    if (small_poly.n > big_poly.n)
        throw std::invalid_argument("check_inclusion: host sizes out of order");

    CheckReport r;
    r.claim = "every vertex of the host-" + std::to_string(big_poly.n) +
              " polytope lies in the host-" + std::to_string(small_poly.n) +
              " polytope";
    for (std::size_t i = 0; i < big_poly.hull.vertices.size(); ++i) {
        const Vec& v = big_poly.hull.vertices[i];
        Membership m = membership(v, small_poly.hull.vertices);
        std::string detail;
        if (!m.inside)
            detail = "separating functional c=" + vec_str(m.c) + ", b=" + rat_str(m.b);
        r.add("vertex " + vec_str(v), m.inside, detail);
    }
    return r;
}

CheckReport check_inclusion(const GraphVector& fs, int n_small, int n_big) {
    SubgraphPolytope small_poly = build_polytope(fs, n_small, PolyKind::density);
    SubgraphPolytope big_poly = build_polytope(fs, n_big, PolyKind::density);
    return check_inclusion(small_poly, big_poly);
}

CheckReport check_ehrhart_scaling(const GraphVector& fs, int n, int n1, int n2) {
    for (int i = 0; i < fs.size(); ++i)
        if (fs[i].n() != n)
            throw std::invalid_argument("check_ehrhart_scaling: mixed pattern orders");
    if (!(n <= n1 && n1 <= n2))
        throw std::invalid_argument("check_ehrhart_scaling: need n <= n' <= n''");
    if (fs.size() > 3)
        throw capacity_error("check_ehrhart_scaling: at most 3 patterns (lattice counting)");

    SubgraphPolytope P1 = build_polytope(fs, n1, PolyKind::lattice);
    SubgraphPolytope P2 = build_polytope(fs, n2, PolyKind::lattice);
    int D1 = affine_rank(P1.hull.vertices);
    int D2 = affine_rank(P2.hull.vertices);

    std::vector<long> ks1(D1 + 2), ks2(D2 + 2);
    for (int i = 0; i < D1 + 2; ++i) ks1[i] = i + 1;
    for (int i = 0; i < D2 + 2; ++i) ks2[i] = i + 1;
    EhrhartPoly E1 = fit_ehrhart(P1.hull, ks1);
    EhrhartPoly E2 = fit_ehrhart(P2.hull, ks2);

    Rat c1 = Rat(binomial(n1, n));
    Rat c2 = Rat(binomial(n2, n));

    CheckReport r;
    r.claim = "scaled lattice-point counts nest: E_{n''}(C(n',n)k) <= E_{n'}(C(n'',n)k)";
    r.add("interpolation", true,
          "E_small(k) = " + ehrhart_str(E1) + "; E_big(k) = " + ehrhart_str(E2));
    for (long k = 1; k <= 4; ++k) {
        Rat lhs = E2.eval(c1 * k);
        Rat rhs = E1.eval(c2 * k);
        r.add("count inequality at k=" + std::to_string(k), lhs <= rhs,
              rat_str(lhs) + " <= " + rat_str(rhs));
    }

    // Direct geometric form: C(n',n) P''  inside  C(n'',n) P'.
    VPolytope big_scaled = dilate(P2.hull, c1);
    VPolytope small_scaled = dilate(P1.hull, c2);
    for (const Vec& v : big_scaled.vertices) {
        Membership m = membership(v, small_scaled.vertices);
        r.add("scaled vertex " + vec_str(v), m.inside,
              m.inside ? "" : "outside: c=" + vec_str(m.c) + ", b=" + rat_str(m.b));
    }
    return r;
}

CheckReport check_nonneg_facets(const GraphVector& fs, int n) {
    int d = fs.size();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j && count_subgraphs(fs[i], fs[j]) > 0)
                throw std::invalid_argument(
                    "check_nonneg_facets: pattern " + fs.names()[i] +
                    " is a subgraph of " + fs.names()[j] + " (hypothesis violated)");

    SubgraphPolytope P = build_polytope(fs, n, PolyKind::density);
    int D = affine_rank(P.hull.vertices);

    CheckReport r;
    r.claim = "each coordinate inequality x_i >= 0 supports a facet of the density polytope";
    for (int i = 0; i < d; ++i) {
        std::vector<Vec> face;
        for (const Vec& v : P.hull.vertices)
            if (v[i] == 0) face.push_back(v);
        int face_rank = face.empty() ? -1 : affine_rank(face);
        bool facet = !face.empty() && face_rank == D - 1;

        bool witness_ok = true;
        std::string detail = std::to_string(face.size()) +
                             " zero-coordinate vertices, face dimension " +
                             std::to_string(face_rank) + " of " + std::to_string(D);
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            Graph g = pad_with_isolated(fs[j], n);
            Vec x = stat_vector_density(fs, g);
            bool zero = x[i] == 0;
            bool inside = membership(x, P.hull).inside;
            witness_ok = witness_ok && zero && inside;
            detail += "; witness " + fs.names()[j] + "+isolated " + vec_str(x) +
                      (zero && inside ? " on face" : " NOT on face");
        }
        r.add("x_" + std::to_string(i + 1) + " >= 0 (pattern " + fs.names()[i] + ")",
              facet && witness_ok, detail);
    }
    return r;
}

}  // namespace subpoly
