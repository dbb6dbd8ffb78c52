#include "subpoly/spine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "subpoly/linalg.hpp"
#include "subpoly/statpoly.hpp"

namespace subpoly {

SpineSpec::SpineSpec(std::vector<int> es) : exponents(std::move(es)) {
    if (exponents.empty()) throw std::invalid_argument("spine spec: no exponents");
    for (int e : exponents)
        if (e < 1) throw std::invalid_argument("spine spec: exponents must be positive");
    std::set<int> distinct(exponents.begin(), exponents.end());
    if (distinct.size() != exponents.size())
        throw std::invalid_argument("spine spec: exponents must be distinct");
}

std::vector<int> SpineSpec::sorted_desc() const {
    std::vector<int> es(exponents);
    std::sort(es.rbegin(), es.rend());
    return es;
}

Vec spine_point(const SpineSpec& spec, const Rat& p) {
    if (p < 0 || p > 1) throw std::invalid_argument("spine_point: p outside [0,1]");
    Vec v;
    v.reserve(spec.exponents.size());
    for (int e : spec.exponents) v.push_back(rat_pow(p, e));
    return v;
}

CheckReport check_spine_containment(const GraphVector& fs, int n, int grid) {
    if (grid < 1) throw std::invalid_argument("check_spine_containment: grid must be >= 1");
    SubgraphPolytope P = build_polytope(fs, n, PolyKind::density);

    CheckReport r;
    r.claim = "spine grid points lie in the density polytope (host " +
              std::to_string(n) + ")";
    for (int j = 0; j <= grid; ++j) {
        Rat p = Rat(j) / grid;
        Vec v;
        for (int e : fs.edge_counts()) v.push_back(rat_pow(p, e));
        Membership m = membership(v, P.hull.vertices);
        r.add("p=" + rat_str(p), m.inside,
              m.inside ? "" : "separated: c=" + vec_str(m.c) + ", b=" + rat_str(m.b));
    }
    return r;
}

std::vector<std::vector<int>> gale_evenness_facets(int npoints, int d) {
    if (d < 1 || npoints < d)
        throw std::invalid_argument("gale_evenness_facets: need npoints >= d >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> subset(d);
    std::function<void(int, int)> rec = [&](int start, int picked) {
        if (picked == d) {
            // Every run of chosen indices strictly between unchosen ones
            // must have even length.
            bool ok = true;
            for (int a = 0; a < d && ok;) {
                int b = a;
                while (b + 1 < d && subset[b + 1] == subset[b] + 1) ++b;
                bool interior = subset[a] > 0 && subset[b] < npoints - 1;
                if (interior && (b - a + 1) % 2 != 0) ok = false;
                a = b + 1;
            }
            if (ok) out.push_back(subset);
            return;
        }
        for (int v = start; v < npoints; ++v) {
            subset[picked] = v;
            rec(v + 1, picked + 1);
        }
    };
    rec(0, 0);
    return out;
}

CyclicPolytopeResult cyclic_polytope_on_spine(const SpineSpec& spec,
                                              const std::vector<Rat>& xs) {
    int d = spec.dim();
    if (static_cast<int>(xs.size()) < d + 1)
        throw std::invalid_argument("cyclic_polytope_on_spine: need at least d+1 points");
    std::vector<Rat> sorted(xs);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("cyclic_polytope_on_spine: repeated curve parameter");

    CyclicPolytopeResult res;
    res.hull.dim = d;
    for (const Rat& x : sorted) res.hull.vertices.push_back(spine_point(spec, x));

    int npts = static_cast<int>(sorted.size());
    res.all_extreme =
        static_cast<int>(extreme_point_indices(res.hull.vertices).size()) == npts;
    res.gale_facets = gale_evenness_facets(npts, d);

    if (res.all_extreme && d <= 3) {
        HullFacets hf = hull_facets(res.hull);
        if (!hf.degenerate) {
            std::set<std::vector<int>> brute, predicted;
            for (const Facet& f : hf.facets) {
                std::vector<int> inc(f.incident);
                std::sort(inc.begin(), inc.end());
                brute.insert(inc);
            }
            for (const auto& s : res.gale_facets) predicted.insert(s);
            res.facets_checked = true;
            res.facets_match = brute == predicted;
        }
    }
    return res;
}

Rat gale_volume_sum(const SpineSpec& spec, long n) {
    int d = spec.dim();
    if (n < d) throw std::invalid_argument("gale_volume_sum: subdivision too small");
    std::vector<int> es(spec.exponents);
    std::sort(es.begin(), es.end());  // row order; volume is order-insensitive

    // Work on the row-rescaled integer matrix: entry for row r, column j is
    // j^{e_r}; the true determinants are recovered by n^{sum e} at the end.
    // dp[mask]: signed sum over placements of adjacent column pairs into the
    // rows of `mask`, with generalized Laplace signs against the unused rows.
    const int full = (1 << d) - 1;
    auto place_pairs = [&](std::vector<Int>& g0, const std::vector<Int>& g1,
                           const std::vector<Int>& g2, long j) {
        // g0 = state through column j+1; pair occupies columns (j, j+1).
        std::vector<Int> powj(d), powj1(d);
        for (int r = 0; r < d; ++r) {
            powj[r] = int_pow(Int(j), es[r]);
            powj1[r] = int_pow(Int(j + 1), es[r]);
        }
        g0 = g1;
        for (int mask = 0; mask <= full; ++mask) {
            if (g2[mask] == 0) continue;
            int rest = full & ~mask;
            for (int a = 0; a < d; ++a) {
                if (!(rest >> a & 1)) continue;
                for (int b = a + 1; b < d; ++b) {
                    if (!(rest >> b & 1)) continue;
                    int nmask = mask | (1 << a) | (1 << b);
                    int future = full & ~nmask;
                    int inv = std::popcount(unsigned(future & ((1 << a) - 1))) +
                              std::popcount(unsigned(future & ((1 << b) - 1)));
                    Int minor = powj[a] * powj1[b] - powj1[a] * powj[b];
                    if (inv % 2) minor = -minor;
                    g0[nmask] += g2[mask] * minor;
                }
            }
        }
    };

    std::vector<Int> g2(full + 1, 0), g1(full + 1, 0), g0;
    g2[0] = 1;  // state through column 0
    g1 = g2;    // state through column 1 (no pair fits yet)
    long last = d % 2 == 0 ? n : n - 1;
    for (long i = 2; i <= last; ++i) {
        place_pairs(g0, g1, g2, i - 1);
        g2 = std::move(g1);
        g1 = std::move(g0);
    }

    Int total = 0;
    if (d % 2 == 0) {
        total = g1[full];
    } else {
        // Odd dimension: the remaining row takes the final column x = 1,
        // whose rescaled entry is n^{e_r}; its block carries no extra sign.
        for (int a = 0; a < d; ++a)
            total += g1[full & ~(1 << a)] * int_pow(Int(n), es[a]);
    }

    long long esum = 0;
    for (int e : es) esum += e;
    Rat vol = Rat(total) / (Rat(int_pow(Int(n), esum)) * Rat(factorial(d)));
    if (vol < 0) throw std::logic_error("gale_volume_sum: negative determinant sum");
    return vol;
}

namespace {

// Enumerates semistandard tableaux of the given shape with entries in 1..k,
// reporting the content (per-letter multiplicities) of each tableau.
void for_each_tableau_content(const std::vector<int>& shape, int k,
                              const std::function<void(const std::vector<int>&)>& fn) {
    int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(shape[r], 0);
    std::vector<int> content(k, 0);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            fn(content);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);                        // weak rows
        if (r > 0 && c < shape[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);  // strict cols
        for (int v = lo; v <= k; ++v) {
            t[r][c] = v;
            ++content[v - 1];
            rec(nr, nc);
            --content[v - 1];
        }
    };
    if (rows == 0)
        fn(content);
    else
        rec(0, 0);
}

std::vector<int> normalized_shape(const std::vector<int>& lambda, int k) {
    std::vector<int> shape;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("schur: negative part");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("schur: parts must be weakly decreasing");
        if (lambda[i] > 0) shape.push_back(lambda[i]);
    }
    if (static_cast<int>(shape.size()) > k) shape.clear();  // S_lambda = 0 marker
    return shape;
}

}  // namespace

Rat schur_eval(const std::vector<int>& lambda, const std::vector<Rat>& xs) {
    int k = static_cast<int>(xs.size());
    if (k == 0) throw std::invalid_argument("schur_eval: no arguments");
    bool zero = false;
    {
        int nonzero = 0;
        for (int p : lambda)
            if (p > 0) ++nonzero;
        zero = nonzero > k;
    }
    if (zero) return Rat(0);
    std::vector<int> shape = normalized_shape(lambda, k);

    Rat total = 0;
    for_each_tableau_content(shape, k, [&](const std::vector<int>& content) {
        Rat term = 1;
        for (int i = 0; i < k; ++i)
            if (content[i]) term *= rat_pow(xs[i], content[i]);
        total += term;
    });
    return total;
}

Rat schur_bialternant(const std::vector<int>& lambda, const std::vector<Rat>& xs) {
    int k = static_cast<int>(xs.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (xs[i] == xs[j])
                throw std::invalid_argument("schur_bialternant: repeated arguments");
    std::vector<int> parts(lambda);
    parts.resize(k, 0);

    Mat num(k, Vec(k)), den(k, Vec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            num[i][j] = rat_pow(xs[i], parts[j] + k - 1 - j);
            den[i][j] = rat_pow(xs[i], k - 1 - j);
        }
    Rat dd = det(den);
    if (dd == 0) throw std::logic_error("schur_bialternant: vanishing Vandermonde");
    return det(num) / dd;
}

std::vector<int> spine_partition(const SpineSpec& spec) {
    std::vector<int> es = spec.sorted_desc();
    int d = spec.dim();
    std::vector<int> lambda(d);
    for (int i = 0; i < d; ++i) {
        lambda[i] = es[i] - (d - 1 - i);
        if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1]))
            throw std::logic_error("spine_partition: not a partition");
    }
    return lambda;
}

namespace {

// Gauss-Legendre nodes and weights on [0,1].
void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(npts);
    weights.resize(npts);
    for (int i = 0; i < npts; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (npts + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= npts; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = npts * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = (x + 1.0) / 2.0;
        weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

double quadrature_run(const std::map<std::vector<int>, long long>& poly, int m,
                      bool odd, int npts) {
    std::vector<double> nodes, weights;
    gauss_legendre(npts, nodes, weights);

    int maxexp = 0;
    for (const auto& [mono, c] : poly)
        for (int e : mono) maxexp = std::max(maxexp, e);
    // pow_table[v][i][e] = nodes[i]^e for variable v (shared table suffices).
    std::vector<std::vector<double>> pw(npts, std::vector<double>(maxexp + 1, 1.0));
    for (int i = 0; i < npts; ++i)
        for (int e = 1; e <= maxexp; ++e) pw[i][e] = pw[i][e - 1] * nodes[i];

    std::vector<int> idx(m, 0);
    double total = 0;
    while (true) {
        double w = 1.0;
        for (int v = 0; v < m; ++v) w *= weights[idx[v]];
        double s = 0;
        for (const auto& [mono, c] : poly) {
            double term = static_cast<double>(c);
            for (int v = 0; v < m; ++v) term *= pw[idx[v]][mono[v]];
            s += term;
        }
        double van = 1.0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                double diff = nodes[idx[a]] - nodes[idx[b]];
                double d2 = diff * diff;
                van *= d2 * d2;
            }
        if (odd)
            for (int v = 0; v < m; ++v) {
                double om = 1.0 - nodes[idx[v]];
                van *= om * om;
            }
        total += w * s * van;

        int v = m - 1;
        while (v >= 0 && idx[v] == npts - 1) idx[v--] = 0;
        if (v < 0) break;
        ++idx[v];
    }
    return total;
}

}  // namespace

QuadratureResult spine_volume_quadrature(const SpineSpec& spec) {
    int d = spec.dim();
    int m = d / 2;
    bool odd = d % 2 == 1;
    if (m > 3) throw capacity_error("spine_volume_quadrature: at most 7 exponents");

    std::vector<int> lambda = spine_partition(spec);
    std::vector<int> shape = normalized_shape(lambda, d);

    // Collapse the Schur tableau sum to a polynomial in the m doubled
    // variables; in the odd case the last argument is the constant 1.
    std::map<std::vector<int>, long long> poly;
    for_each_tableau_content(shape, d, [&](const std::vector<int>& content) {
        std::vector<int> mono(m, 0);
        for (int letter = 0; letter < d; ++letter) {
            int var = letter / 2;
            if (var < m) mono[var] += content[letter];
        }
        ++poly[mono];
    });

    double pref = 1.0 / (rat_double(Rat(factorial(d))) * rat_double(Rat(factorial(m))));
    if (m == 0) return {pref * static_cast<double>(poly.begin()->second), 0.0};

    double v48 = pref * quadrature_run(poly, m, odd, 48);
    double v64 = pref * quadrature_run(poly, m, odd, 64);
    return {v64, std::abs(v64 - v48)};
}

Rat pfaffian_product(const SpineSpec& spec) {
    std::vector<int> es = spec.sorted_desc();
    int d = spec.dim();
    Rat prod = 1;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            prod *= Rat(es[i] - es[j]) / Rat(es[i] + es[j]);
    return prod / Rat(factorial(d));
}

CheckReport check_volume_oracles(const SpineSpec& spec, long subdivision) {
    CheckReport r;
    std::string name;
    for (std::size_t i = 0; i < spec.exponents.size(); ++i)
        name += (i ? "," : "(") + std::to_string(spec.exponents[i]);
    name += ")";
    r.claim = "volume oracles agree for exponents " + name;

    Rat product = pfaffian_product(spec);
    Rat gale = gale_volume_sum(spec, subdivision);
    long long esum = 0;
    for (int e : spec.exponents) esum += e;
    Rat tol = Rat(5 * esum) / subdivision;
    Rat diff = gale - product;
    if (diff < 0) diff = -diff;
    r.add("subdivision sum vs product formula", diff <= tol,
          "|" + rat_str(gale) + " - " + rat_str(product) + "| vs " + rat_str(tol));

    QuadratureResult q = spine_volume_quadrature(spec);
    double pd = rat_double(product);
    r.add("quadrature vs product formula", std::abs(q.value - pd) <= 1e-9,
          "quadrature " + std::to_string(q.value) + ", product " + std::to_string(pd));
    return r;
}

Rat pfaffian_eval(const Mat& a) {
    int s = static_cast<int>(a.size());
    if (s == 0 || s % 2 != 0 || s > 8)
        throw std::invalid_argument("pfaffian_eval: size must be even, 2..8");
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(a[i].size()) != s)
            throw std::invalid_argument("pfaffian_eval: not square");
        for (int j = 0; j < s; ++j)
            if (a[i][j] != -a[j][i])
                throw std::invalid_argument("pfaffian_eval: not antisymmetric");
    }

    std::function<Rat(std::vector<int>)> pf = [&](std::vector<int> idx) -> Rat {
        if (idx.empty()) return Rat(1);
        Rat total = 0;
        for (std::size_t t = 1; t < idx.size(); ++t) {
            std::vector<int> rest;
            for (std::size_t u = 1; u < idx.size(); ++u)
                if (u != t) rest.push_back(idx[u]);
            Rat term = a[idx[0]][idx[t]] * pf(std::move(rest));
            if (t % 2 == 1)
                total += term;
            else
                total -= term;
        }
        return total;
    };

    std::vector<int> all(s);
    for (int i = 0; i < s; ++i) all[i] = i;
    Rat v = pf(all);
    if (v * v != det(a)) throw std::logic_error("pfaffian_eval: Pf^2 != det");
    return v;
}

}  // namespace subpoly
