#include "subpoly/zonotope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subpoly/linalg.hpp"
#include "subpoly/lp.hpp"
#include "subpoly/statpoly.hpp"

namespace subpoly {

StepKernel::StepKernel(int n, std::vector<std::vector<Rat>> m)
    : steps(n), entries(std::move(m)) {
    if (n < 1) throw std::invalid_argument("step kernel: need at least one step");
    if (static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("step kernel: row count mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries[i].size()) != n)
            throw std::invalid_argument("step kernel: not square");
        for (int j = 0; j < n; ++j) {
            if (entries[i][j] < 0 || entries[i][j] > 1)
                throw std::invalid_argument("step kernel: entry outside [0,1]");
            if (entries[i][j] != entries[j][i])
                throw std::invalid_argument("step kernel: not symmetric");
        }
    }
}

StepKernel StepKernel::constant(int n, const Rat& c) {
    return StepKernel(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, c)));
}

Rat p_eval(const Graph& f, const StepKernel& k) {
    int fv = f.n();
    int n = k.steps;
    double total = std::pow(double(n), fv);
    if (total > 5e6) throw capacity_error("p_eval: steps^|F| too large");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < fv; ++i)
        for (int j = i + 1; j < fv; ++j)
            if (f.has_edge(i, j)) edges.emplace_back(i, j);

    std::vector<int> phi(fv, 0);
    Rat sum = 0;
    while (true) {
        Rat prod = 1;
        for (const auto& [i, j] : edges) {
            prod *= k.entries[phi[i]][phi[j]];
            if (prod == 0) break;
        }
        sum += prod;
        int v = fv - 1;
        while (v >= 0 && phi[v] == n - 1) phi[v--] = 0;
        if (v < 0) break;
        ++phi[v];
    }
    return sum / rat_pow(Rat(n), fv);
}

StepKernel blow_up(const StepKernel& k, int factor) {
    if (factor < 1) throw std::invalid_argument("blow_up: factor must be >= 1");
    int n = k.steps * factor;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = k.entries[i / factor][j / factor];
    return StepKernel(n, std::move(m));
}

namespace {

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection from the smallest covering power of two keeps the draw
    // uniform and the stream portable.
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    while (true) {
        std::uint64_t r = rng() & mask;
        if (r < bound) return r;
    }
}

Vec density_point(const GraphVector& fs, const StepKernel& k) {
    Vec p;
    p.reserve(fs.size());
    for (int i = 0; i < fs.size(); ++i) p.push_back(p_eval(fs[i], k));
    return p;
}

}  // namespace

std::vector<ZonotopeSample> zonotope_sample(const GraphVector& fs, int steps,
                                            int count, std::uint64_t seed) {
    if (count < 2)
        throw std::invalid_argument("zonotope_sample: need count >= 2 (corner kernels)");
    std::mt19937_64 rng(seed);
    std::vector<ZonotopeSample> out;
    out.reserve(count);
    out.push_back({StepKernel::zero(steps), {}});
    out.push_back({StepKernel::one(steps), {}});
    for (int s = 2; s < count; ++s) {
        std::vector<std::vector<Rat>> m(steps, std::vector<Rat>(steps));
        for (int i = 0; i < steps; ++i)
            for (int j = i; j < steps; ++j) {
                Rat v = Rat(Int(bounded_rand(rng, 65536))) / 65535;
                m[i][j] = m[j][i] = v;
            }
        out.push_back({StepKernel(steps, std::move(m)), {}});
    }
    for (auto& s : out) s.point = density_point(fs, s.kernel);
    return out;
}

CheckReport check_zonotope_in_polytope(const GraphVector& fs, int n, int steps,
                                       int count, std::uint64_t seed) {
    SubgraphPolytope P = build_polytope(fs, n, PolyKind::density);
    std::vector<ZonotopeSample> samples = zonotope_sample(fs, steps, count, seed);

    // Exact facet description when the polytope is full-dimensional and low
    // dimensional; it lets most samples pass on a double-precision slack test
    // whose rounding error is far below the acceptance margin.
    bool have_facets = false;
    HullFacets hf;
    std::vector<std::vector<double>> nd;
    std::vector<double> od, scale;
    if (fs.size() <= 3) {
        hf = hull_facets(P.hull);
        if (!hf.degenerate) {
            have_facets = true;
            for (const Facet& f : hf.facets) {
                std::vector<double> row;
                double sc = 0;
                for (const Rat& a : f.normal) {
                    row.push_back(rat_double(a));
                    sc += std::abs(rat_double(a));
                }
                nd.push_back(row);
                od.push_back(rat_double(f.offset));
                scale.push_back(sc + std::abs(rat_double(f.offset)) + 1.0);
            }
        }
    }

    CheckReport r;
    r.claim = "sampled kernel density vectors lie in the order-" +
              std::to_string(n) + " density polytope";
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const Vec& x = samples[s].point;
        std::string label = "sample " + std::to_string(s) +
                            (s == 0 ? " (zero kernel)" : s == 1 ? " (one kernel)" : "");
        if (have_facets) {
            std::vector<double> xd;
            for (const Rat& c : x) xd.push_back(rat_double(c));
            bool clear = true;
            for (std::size_t f = 0; f < nd.size() && clear; ++f) {
                double slack = od[f];
                for (std::size_t j = 0; j < xd.size(); ++j) slack -= nd[f][j] * xd[j];
                if (slack < 1e-7 * scale[f]) clear = false;
            }
            if (clear) {
                r.add(label, true);
                continue;
            }
            bool inside = true;
            std::string bad;
            for (const Facet& f : hf.facets) {
                if (dot(f.normal, x) > f.offset) {
                    inside = false;
                    bad = "violates facet <" + vec_str(f.normal) +
                          ", x> <= " + rat_str(f.offset);
                    break;
                }
            }
            r.add(label, inside, bad);
        } else {
            Membership m = membership(x, P.hull.vertices);
            r.add(label, m.inside,
                  m.inside ? "" : "separated: c=" + vec_str(m.c) + ", b=" + rat_str(m.b));
        }
    }
    return r;
}

FullDimWitness full_dim_witness(const GraphVector& fs, int steps, int count,
                                std::uint64_t seed) {
    int d = fs.size();
    std::vector<ZonotopeSample> samples = zonotope_sample(fs, steps, count, seed);

    FullDimWitness w;
    std::vector<Vec> chosen;
    int rank = -1;
    for (const ZonotopeSample& s : samples) {
        chosen.push_back(s.point);
        int nr = affine_rank(chosen);
        if (nr > rank)
            rank = nr;
        else
            chosen.pop_back();
        if (rank == d) break;
    }
    if (rank < d) return w;

    w.found = true;
    w.simplex = chosen;
    Mat diffs;
    for (int i = 1; i <= d; ++i) diffs.push_back(vec_sub(chosen[i], chosen[0]));
    Rat dv = det(diffs);
    if (dv < 0) dv = -dv;
    w.volume = dv / Rat(factorial(d));
    if (w.volume == 0) throw std::logic_error("full_dim_witness: flat simplex slipped through");
    return w;
}

ZonotopeVolume zonotope_hull_volume(const GraphVector& fs, int steps, int count,
                                    std::uint64_t seed, long mc_samples) {
    std::vector<ZonotopeSample> samples = zonotope_sample(fs, steps, count, seed);
    std::vector<Vec> pts;
    for (const ZonotopeSample& s : samples) pts.push_back(s.point);

    ZonotopeVolume zv;
    if (fs.size() <= 3) {
        VPolytope P = extreme_points(pts);
        VolumeResult vr = exact_volume(P);
        zv.exact = true;
        zv.volume = vr.volume;
        return zv;
    }

    std::vector<int> ext = extreme_point_indices(pts);
    std::vector<Vec> verts;
    for (int i : ext) verts.push_back(pts[i]);
    std::vector<std::pair<Rat, Rat>> box;
    for (std::size_t j = 0; j < pts[0].size(); ++j) {
        Rat lo = pts[0][j], hi = pts[0][j];
        for (const Vec& p : pts) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        box.emplace_back(lo, hi);
    }
    zv.mc = monte_carlo_volume(
        [&](const Vec& p) { return membership(p, verts).inside; }, box, mc_samples,
        seed ^ 0x5bf03635u);
    return zv;
}

std::vector<std::uint32_t> sample_gnw(int m, const StepKernel& k,
                                      std::mt19937_64& rng) {
    if (m < 1 || m > 32) throw std::invalid_argument("sample_gnw: m must be 1..32");
    std::vector<int> step(m);
    for (int v = 0; v < m; ++v)
        step[v] = static_cast<int>(bounded_rand(rng, k.steps));

    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Rat& p = k.entries[step[i]][step[j]];
            Int num = numerator(p), den = denominator(p);
            if (den > Int(1) << 40)
                throw capacity_error("sample_gnw: entry denominator too large");
            bool edge =
                bounded_rand(rng, den.convert_to<std::uint64_t>()) <
                num.convert_to<std::uint64_t>();
            if (edge) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
        }
    return adj;
}

}  // namespace subpoly
