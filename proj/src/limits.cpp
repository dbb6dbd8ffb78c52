#include "subpoly/limits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "subpoly/linalg.hpp"
#include "subpoly/lp.hpp"
#include "subpoly/spine.hpp"
#include "subpoly/statpoly.hpp"
#include "subpoly/zonotope.hpp"

namespace subpoly {

TailSpec::TailSpec(std::vector<int> orders_) : orders(std::move(orders_)) {
    if (orders.empty()) throw std::invalid_argument("tail spec: no clique orders");
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 2)
            throw std::invalid_argument("tail spec: clique orders must be >= 2");
        if (i > 0 && orders[i] <= orders[i - 1])
            throw std::invalid_argument("tail spec: clique orders must increase");
    }
}

GraphVector TailSpec::to_graph_vector() const {
    std::vector<Graph> ps;
    for (int e : orders) ps.push_back(Graph::complete(e));
    return GraphVector(std::move(ps));
}

Vec tail_point(const TailSpec& spec, const Rat& x) {
    if (x < 0 || x > 1) throw std::invalid_argument("tail_point: x outside [0,1]");
    Vec v;
    for (int e : spec.orders) {
        Rat prod = 1;
        for (int j = 1; j < e; ++j) prod *= Rat(1) - Rat(j) * x;
        v.push_back(prod);
    }
    return v;
}

VPolytope razborov_polygon(int K) {
    if (K < 2) throw std::invalid_argument("razborov_polygon: K must be >= 2");
    TailSpec spec({2, 3});
    std::vector<Vec> pts;
    pts.push_back({Rat(0), Rat(0)});
    pts.push_back({Rat(1), Rat(1)});
    for (int k = 2; k <= K; ++k) pts.push_back(tail_point(spec, Rat(1) / k));
    return extreme_points(pts);
}

CheckReport check_limit_inclusions(const TailSpec& spec, int n_max) {
    GraphVector fs = spec.to_graph_vector();
    int e_max = spec.orders.back();
    if (n_max < e_max)
        throw std::invalid_argument("check_limit_inclusions: n_max below largest clique");

    CheckReport r;
    r.claim = "finite levels contain the known limit points";

    if (spec.orders == std::vector<int>{2, 3}) {
        VPolytope RP = razborov_polygon(10);
        for (int n = 3; n <= n_max; ++n) {
            SubgraphPolytope P = build_polytope(fs, n, PolyKind::density);
            bool ok = true;
            std::string bad;
            for (const Vec& v : RP.vertices) {
                if (!membership(v, P.hull.vertices).inside) {
                    ok = false;
                    bad = "vertex " + vec_str(v) + " escapes";
                    break;
                }
            }
            r.add("razborov polygon inside host " + std::to_string(n), ok, bad);
        }
    }

    {
        SubgraphPolytope P = build_polytope(fs, n_max, PolyKind::density);
        for (int k = 0; k <= 10; ++k) {
            Rat x = k == 0 ? Rat(0) : Rat(1) / k;
            Vec v = tail_point(spec, x);
            Membership m = membership(v, P.hull.vertices);
            r.add("tail point x=" + rat_str(x) + " inside host " + std::to_string(n_max),
                  m.inside, m.inside ? "" : "separated: c=" + vec_str(m.c));
        }
    }

    for (int k = 2; k <= 3; ++k) {
        Vec limit = tail_point(spec, Rat(1) / k);
        std::vector<Rat> gaps;
        for (int n = e_max; n <= n_max; ++n) {
            Graph t = turan_graph(k, n);
            Rat gap = 0;
            for (int i = 0; i < fs.size(); ++i) {
                Rat diff = density(fs[i], t) - limit[i];
                if (diff < 0) diff = -diff;
                gap = std::max(gap, diff);
            }
            gaps.push_back(gap);
        }
        bool mono = true;
        std::string detail;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            if (i > 0 && gaps[i] > gaps[i - 1]) mono = false;
            detail += (i ? ", " : "gaps: ") + rat_str(gaps[i]);
        }
        r.add("k-partite sup-distance shrinks, k=" + std::to_string(k), mono, detail);
    }
    return r;
}

CheckReport check_tail_cyclic(const TailSpec& spec, const std::vector<Rat>& xs) {
    int d = spec.dim();
    if (static_cast<int>(xs.size()) < d + 1)
        throw std::invalid_argument("check_tail_cyclic: need at least d+1 parameters");
    std::vector<Rat> sorted(xs);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("check_tail_cyclic: repeated parameter");

    std::vector<Vec> pts;
    for (const Rat& x : sorted) pts.push_back(tail_point(spec, x));
    int npts = static_cast<int>(pts.size());

    CheckReport r;
    r.claim = "tail points sit in cyclic position";
    bool all_ext = static_cast<int>(extreme_point_indices(pts).size()) == npts;
    r.add("all " + std::to_string(npts) + " points extreme", all_ext);

    if (!all_ext || d > 3) {
        if (d > 3)
            r.add("facet comparison", true, "skipped (ambient dimension > 3)");
        return r;
    }
    VPolytope P{d, pts, {}};
    HullFacets hf = hull_facets(P);
    if (hf.degenerate) {
        r.add("hull full-dimensional", false,
              "affine dimension " + std::to_string(hf.affine_dim));
        return r;
    }
    std::set<std::vector<int>> brute, predicted;
    for (const Facet& f : hf.facets) {
        std::vector<int> inc(f.incident);
        std::sort(inc.begin(), inc.end());
        brute.insert(inc);
    }
    for (const auto& s : gale_evenness_facets(npts, d)) predicted.insert(s);
    r.add("facets match the evenness pattern", brute == predicted,
          std::to_string(brute.size()) + " hull facets vs " +
              std::to_string(predicted.size()) + " predicted");
    return r;
}

std::vector<Vec> clip_polygon(const std::vector<Vec>& poly, const Vec& a, const Rat& b) {
    std::vector<Vec> out;
    int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const Vec& p = poly[i];
        const Vec& q = poly[(i + 1) % n];
        Rat sp = b - dot(a, p), sq = b - dot(a, q);
        if (sp >= 0) out.push_back(p);
        if ((sp >= 0) != (sq >= 0)) {
            Rat t = sp / (sp - sq);
            Vec m;
            for (std::size_t j = 0; j < p.size(); ++j)
                m.push_back(p[j] + t * (q[j] - p[j]));
            out.push_back(m);
        }
    }
    return out;
}

namespace {

Rat polygon_area(const std::vector<Vec>& poly) {
    Rat twice = 0;
    int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const Vec& p = poly[i];
        const Vec& q = poly[(i + 1) % n];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    if (twice < 0) twice = -twice;
    return twice / 2;
}

}  // namespace

GapResult conjecture_gap(const TailSpec& spec, int host_n, int k_max,
                         int samples, std::uint64_t seed) {
    if (k_max < 1) throw std::invalid_argument("conjecture_gap: k_max must be >= 1");
    if (samples < 0) throw std::invalid_argument("conjecture_gap: negative sample count");
    int m = spec.dim();
    int e_max = spec.orders.back();
    GraphVector fs = spec.to_graph_vector();
    SubgraphPolytope host = build_polytope(fs, host_n, PolyKind::density);

    std::vector<Vec> gens;
    gens.push_back(tail_point(spec, Rat(0)));  // the all-ones vertex
    for (int k = 1; k <= k_max; ++k) gens.push_back(tail_point(spec, Rat(1) / k));

    GapResult g;
    g.inclusion.claim = "tail generators lie in the order-" + std::to_string(host_n) +
                        " density polytope";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Membership mm = membership(gens[i], host.hull.vertices);
        std::string label = i == 0 ? "x=0" : "x=1/" + std::to_string(i);
        g.inclusion.add(label, mm.inside,
                        mm.inside ? "" : "separated: c=" + vec_str(mm.c));
    }

    VPolytope inner = extreme_points(gens);
    if (m <= 3) {
        g.volumes_exact = true;
        g.inner_volume = exact_volume(inner).volume;
        g.outer_volume = exact_volume(host.hull).volume;
    }

    if (samples > 0) {
        int per_size = std::max(2, samples / 3);
        for (int steps = 2; steps <= 4; ++steps)
            for (const ZonotopeSample& s :
                 zonotope_sample(fs, steps, per_size, seed + steps)) {
                if (membership(s.point, inner.vertices).inside) {
                    ++g.samples_inside;
                } else {
                    ++g.samples_outside;
                    g.candidates.push_back(s.point);
                }
            }
    }

    // Facet-violation trend of the finite levels against the inner hull.
    g.trend = "inconclusive (no exact facet description)";
    if (m <= 3) {
        HullFacets hf = hull_facets(inner);
        if (!hf.degenerate) {
            std::vector<Rat> viols;
            for (int n = e_max; n <= host_n; ++n) {
                SubgraphPolytope P =
                    n == host_n ? host : build_polytope(fs, n, PolyKind::density);
                Rat worst = 0;
                for (const Vec& v : P.hull.vertices)
                    for (const Facet& f : hf.facets) {
                        Rat scale = 0;
                        for (const Rat& c : f.normal) scale += c < 0 ? -c : c;
                        Rat excess = (dot(f.normal, v) - f.offset) / scale;
                        worst = std::max(worst, excess);
                    }
                viols.push_back(worst);
            }
            bool mono = true;
            for (std::size_t i = 1; i < viols.size(); ++i)
                if (viols[i] > viols[i - 1]) mono = false;
            g.trend = mono ? "consistent" : "inconclusive";
        }
    }

    if (m == 2 && inner.vertices.size() >= 3) {
        std::vector<int> order = convex_polygon_order(inner.vertices);
        std::vector<Vec> poly;
        for (int i : order) poly.push_back(inner.vertices[i]);
        Rat full = polygon_area(poly);
        for (int p = 3; p <= 6; ++p) {
            Rat delta = Rat(1) / (1 << p);
            std::vector<Vec> clipped =
                clip_polygon(poly, {Rat(1), Rat(1)}, Rat(2) - delta);
            g.chop.emplace_back(delta, full - polygon_area(clipped));
        }
    }
    return g;
}

}  // namespace subpoly
