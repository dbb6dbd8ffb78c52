#include "subpoly/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "subpoly/linalg.hpp"
#include "subpoly/rational.hpp"

namespace subpoly {

namespace {

Rat cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// ---- exact incremental 3D hull with a full conflict graph ----
//
// Every face keeps the complete list of not-yet-inserted points strictly
// outside its plane, and every point the list of faces it violates. When a
// cone face is created over a horizon ridge, candidates are drawn from the
// union of the conflict lists of the two faces incident to that ridge; the
// new plane lies in the pencil spanned by those two, so no conflict can be
// missed. Exact arithmetic makes all visibility tests strict.

struct Face {
    int a, b, c;  // corner indices, counterclockwise from outside
    Vec n;        // outward normal: <n,x> <= d on the hull
    Rat d;
    bool alive = true;
    std::vector<int> conflicts;
};

Vec cross3(const Vec& u, const Vec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

class Hull3D {
  public:
    explicit Hull3D(const std::vector<Vec>& pts) : pts_(pts) { build(); }

    const std::vector<Face>& faces() const { return faces_; }

  private:
    const std::vector<Vec>& pts_;
    std::vector<Face> faces_;
    Vec inner_;  // strictly interior reference point, fixes orientations
    std::map<std::pair<int, int>, int> owner_;  // directed edge -> face id
    std::vector<std::vector<int>> pconf_;       // point -> face ids (may be stale)
    std::vector<char> done_;
    std::vector<int> stamp_, vis_stamp_;

    Rat side(const Face& f, int p) const { return dot(f.n, pts_[p]) - f.d; }

    int new_face(int a, int b, int c, bool allow_flip) {
        Face f;
        f.a = a;
        f.b = b;
        f.c = c;
        f.n = cross3(vec_sub(pts_[b], pts_[a]), vec_sub(pts_[c], pts_[a]));
        f.d = dot(f.n, pts_[a]);
        Rat s = dot(f.n, inner_) - f.d;
        if (s > 0) {
            if (!allow_flip) throw std::logic_error("hull3d: cone face misoriented");
            std::swap(f.b, f.c);
            for (auto& x : f.n) x = -x;
            f.d = -f.d;
            s = -s;
        }
        if (s == 0) throw std::logic_error("hull3d: reference point on face plane");
        int id = static_cast<int>(faces_.size());
        faces_.push_back(std::move(f));
        const Face& g = faces_[id];
        owner_[{g.a, g.b}] = id;
        owner_[{g.b, g.c}] = id;
        owner_[{g.c, g.a}] = id;
        return id;
    }

    void add_conflict(int fid, int p) {
        faces_[fid].conflicts.push_back(p);
        pconf_[p].push_back(fid);
    }

    void build() {
        int n = static_cast<int>(pts_.size());
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<int>(rng() % (i + 1))]);

        done_.assign(n, 0);
        pconf_.assign(n, {});
        stamp_.assign(n, -1);

        // Initial tetrahedron from the permuted order.
        int a = perm[0], b = -1, c = -1, e = -1;
        for (int i = 1; i < n && b < 0; ++i)
            if (pts_[perm[i]] != pts_[a]) b = perm[i];
        if (b < 0) throw std::logic_error("hull3d: input not full-dimensional");
        Vec u = vec_sub(pts_[b], pts_[a]);
        for (int i = 1; i < n && c < 0; ++i) {
            if (perm[i] == b) continue;
            Vec w = cross3(u, vec_sub(pts_[perm[i]], pts_[a]));
            if (w[0] != 0 || w[1] != 0 || w[2] != 0) c = perm[i];
        }
        if (c < 0) throw std::logic_error("hull3d: input not full-dimensional");
        Vec nrm = cross3(u, vec_sub(pts_[c], pts_[a]));
        for (int i = 1; i < n && e < 0; ++i) {
            if (perm[i] == b || perm[i] == c) continue;
            if (dot(nrm, vec_sub(pts_[perm[i]], pts_[a])) != 0) e = perm[i];
        }
        if (e < 0) throw std::logic_error("hull3d: input not full-dimensional");

        inner_.assign(3, Rat(0));
        for (int v : {a, b, c, e})
            for (int k = 0; k < 3; ++k) inner_[k] += pts_[v][k] / 4;
        done_[a] = done_[b] = done_[c] = done_[e] = 1;

        new_face(a, b, c, true);
        new_face(a, b, e, true);
        new_face(a, c, e, true);
        new_face(b, c, e, true);
        for (int p = 0; p < n; ++p) {
            if (done_[p]) continue;
            for (int fid = 0; fid < 4; ++fid)
                if (side(faces_[fid], p) > 0) add_conflict(fid, p);
        }

        vis_stamp_.assign(4, -1);
        for (int i = 0; i < n; ++i) {
            int p = perm[i];
            if (done_[p]) continue;
            done_[p] = 1;
            insert(p);
            pconf_[p].clear();
            pconf_[p].shrink_to_fit();
        }
    }

    void insert(int p) {
        std::vector<int> visible;
        for (int fid : pconf_[p])
            if (faces_[fid].alive) visible.push_back(fid);
        if (visible.empty()) return;  // inside or on the current hull

        vis_stamp_.resize(faces_.size(), -1);
        for (int fid : visible) vis_stamp_[fid] = p;

        // Horizon ridges, each stored with the dying face and its survivor.
        struct Ridge {
            int u, v, dead, live;
        };
        std::vector<Ridge> horizon;
        for (int fid : visible) {
            const Face& f = faces_[fid];
            int vs[3][2] = {{f.a, f.b}, {f.b, f.c}, {f.c, f.a}};
            for (auto& ed : vs) {
                int g = owner_.at({ed[1], ed[0]});
                if (vis_stamp_[g] != p) horizon.push_back({ed[0], ed[1], fid, g});
            }
        }

        for (const Ridge& r : horizon) {
            int id = new_face(p, r.u, r.v, false);
            for (int src : {r.dead, r.live}) {
                for (int q : faces_[src].conflicts) {
                    if (done_[q] || stamp_[q] == id) continue;
                    stamp_[q] = id;
                    if (side(faces_[id], q) > 0) add_conflict(id, q);
                }
            }
        }
        vis_stamp_.resize(faces_.size(), -1);
        for (int fid : visible) {
            faces_[fid].alive = false;
            faces_[fid].conflicts.clear();
            faces_[fid].conflicts.shrink_to_fit();
        }
    }
};

// Canonical integer form of an (outward) plane, for merging coplanar faces.
std::vector<Int> plane_key(const Vec& n, const Rat& d) {
    std::vector<Rat> all(n.begin(), n.end());
    all.push_back(d);
    Int lcm_den = 1;
    for (const Rat& r : all)
        lcm_den = boost::multiprecision::lcm(lcm_den, Int(boost::multiprecision::denominator(r)));
    std::vector<Int> key;
    Int g = 0;
    for (const Rat& r : all) {
        Rat s = r * Rat(lcm_den);
        Int v = Int(boost::multiprecision::numerator(s));
        key.push_back(v);
        g = boost::multiprecision::gcd(g, v);
    }
    if (g != 0)
        for (Int& v : key) v /= g;
    return key;
}

HullFacets facets_3d(const VPolytope& P) {
    Hull3D hull(P.vertices);

    std::map<std::vector<Int>, int> plane_id;
    std::vector<std::pair<Vec, Rat>> planes;
    std::vector<std::vector<int>> plane_faces;
    std::map<int, std::set<int>> corner_planes;
    for (size_t fid = 0; fid < hull.faces().size(); ++fid) {
        const Face& f = hull.faces()[fid];
        if (!f.alive) continue;
        auto key = plane_key(f.n, f.d);
        auto [it, fresh] = plane_id.emplace(key, static_cast<int>(planes.size()));
        if (fresh) {
            planes.emplace_back(f.n, f.d);
            plane_faces.emplace_back();
        }
        plane_faces[it->second].push_back(static_cast<int>(fid));
        for (int v : {f.a, f.b, f.c}) corner_planes[v].insert(it->second);
    }

    HullFacets out;
    for (size_t pid = 0; pid < planes.size(); ++pid) {
        std::set<int> corners;
        for (int fid : plane_faces[pid]) {
            const Face& f = hull.faces()[fid];
            for (int v : {f.a, f.b, f.c})
                if (corner_planes[v].size() >= 3) corners.insert(v);
        }
        // Order the facet polygon by projecting out the largest normal axis.
        const Vec& nrm = planes[pid].first;
        int drop = 0;
        for (int k = 1; k < 3; ++k)
            if (abs(nrm[k]) > abs(nrm[drop])) drop = k;
        int ax = (drop == 0) ? 1 : 0, ay = (drop == 2) ? 1 : 2;
        std::vector<int> ids(corners.begin(), corners.end());
        std::vector<Vec> proj;
        for (int v : ids) proj.push_back({P.vertices[v][ax], P.vertices[v][ay]});
        std::vector<int> order = convex_polygon_order(proj);
        if (order.size() != ids.size())
            throw std::logic_error("hull3d: facet corner not extreme in its plane");

        Facet facet;
        facet.normal = nrm;
        facet.offset = planes[pid].second;
        for (int k : order) facet.incident.push_back(ids[k]);
        // Make the cycle counterclockwise as seen from outside.
        const Vec& p0 = P.vertices[facet.incident[0]];
        const Vec& p1 = P.vertices[facet.incident[1]];
        const Vec& p2 = P.vertices[facet.incident[2]];
        if (dot(cross3(vec_sub(p1, p0), vec_sub(p2, p0)), nrm) < 0)
            std::reverse(facet.incident.begin() + 1, facet.incident.end());
        out.facets.push_back(std::move(facet));
    }
    return out;
}

}  // namespace

std::vector<int> convex_polygon_order(const std::vector<Vec>& pts) {
    int n = static_cast<int>(pts.size());
    if (n == 0) return {};
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (pts[i][0] != pts[j][0]) return pts[i][0] < pts[j][0];
        return pts[i][1] < pts[j][1];
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int i, int j) { return pts[i] == pts[j]; }),
              idx.end());
    n = static_cast<int>(idx.size());
    if (n <= 2) return idx;

    std::vector<int> h(2 * n);
    int k = 0;
    for (int ii = 0; ii < n; ++ii) {  // lower chain
        int i = idx[ii];
        while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
        h[k++] = i;
    }
    int lower = k + 1;
    for (int ii = n - 2; ii >= 0; --ii) {  // upper chain
        int i = idx[ii];
        while (k >= lower && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
        h[k++] = i;
    }
    h.resize(k - 1);
    return h;
}

std::vector<int> hull_extreme_indices(const std::vector<Vec>& points) {
    if (points.empty()) return {};
    int d = static_cast<int>(points[0].size());
    if (d < 1 || d > 3)
        throw capacity_error("hull_extreme_indices: ambient dimension must be 1, 2 or 3");

    std::vector<int> rep;  // first occurrence of each distinct point
    {
        std::map<Vec, int> first;
        for (int i = 0; i < static_cast<int>(points.size()); ++i)
            if (first.emplace(points[i], i).second) rep.push_back(i);
    }
    std::vector<Vec> uniq;
    uniq.reserve(rep.size());
    for (int i : rep) uniq.push_back(points[i]);

    if (affine_rank(uniq) < d) return extreme_point_indices(points);

    std::vector<int> local;
    if (d == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < static_cast<int>(uniq.size()); ++i) {
            if (uniq[i][0] < uniq[lo][0]) lo = i;
            if (uniq[i][0] > uniq[hi][0]) hi = i;
        }
        local = {lo, hi};
    } else if (d == 2) {
        local = convex_polygon_order(uniq);
    } else {
        VPolytope tmp;
        tmp.dim = 3;
        tmp.vertices = uniq;
        std::set<int> corners;
        for (const Facet& f : facets_3d(tmp).facets)
            corners.insert(f.incident.begin(), f.incident.end());
        local.assign(corners.begin(), corners.end());
    }
    std::vector<int> out;
    out.reserve(local.size());
    for (int i : local) out.push_back(rep[i]);
    std::sort(out.begin(), out.end());
    return out;
}

VPolytope extreme_points(const std::vector<Vec>& points) {
    return extreme_points(points, {});
}

VPolytope extreme_points(const std::vector<Vec>& points,
                         const std::vector<std::vector<std::string>>& witnesses) {
    if (!witnesses.empty() && witnesses.size() != points.size())
        throw std::invalid_argument("extreme_points: witness list size mismatch");
    VPolytope P;
    P.dim = points.empty() ? 0 : static_cast<int>(points[0].size());
    for (int i : extreme_point_indices(points)) {
        P.vertices.push_back(points[i]);
        if (!witnesses.empty()) P.witnesses.push_back(witnesses[i]);
    }
    return P;
}

Membership membership(const Vec& p, const VPolytope& P) {
    return membership(p, P.vertices);
}

HullFacets hull_facets(const VPolytope& P) {
    if (P.vertices.empty()) throw std::invalid_argument("hull_facets: empty polytope");
    int d = P.dim;
    if (d < 1 || d > 3)
        throw capacity_error("hull_facets: ambient dimension must be 1, 2 or 3");
    for (const Vec& v : P.vertices)
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("hull_facets: inconsistent point dimension");

    int r = affine_rank(P.vertices);
    if (r < d) {
        HullFacets out;
        out.degenerate = true;
        out.affine_dim = r;
        out.affine_basis = affine_basis_indices(P.vertices);
        return out;
    }

    HullFacets out;
    if (d == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < static_cast<int>(P.vertices.size()); ++i) {
            if (P.vertices[i][0] < P.vertices[lo][0]) lo = i;
            if (P.vertices[i][0] > P.vertices[hi][0]) hi = i;
        }
        out.facets.push_back({{Rat(1)}, P.vertices[hi][0], {hi}});
        out.facets.push_back({{Rat(-1)}, -P.vertices[lo][0], {lo}});
        return out;
    }
    if (d == 2) {
        std::vector<int> cyc = convex_polygon_order(P.vertices);
        int m = static_cast<int>(cyc.size());
        for (int i = 0; i < m; ++i) {
            int a = cyc[i], b = cyc[(i + 1) % m];
            Vec e = vec_sub(P.vertices[b], P.vertices[a]);
            Vec nrm = {e[1], -e[0]};  // outward for a counterclockwise cycle
            out.facets.push_back({nrm, dot(nrm, P.vertices[a]), {a, b}});
        }
        return out;
    }
    return facets_3d(P);
}

VolumeResult exact_volume(const VPolytope& P) {
    if (P.vertices.empty()) throw std::invalid_argument("exact_volume: empty polytope");
    int d = P.dim;
    if (d < 1 || d > 3)
        throw capacity_error("exact_volume: ambient dimension must be 1, 2 or 3");
    if (affine_rank(P.vertices) < d) return {Rat(0), true};

    if (d == 1) {
        Rat lo = P.vertices[0][0], hi = lo;
        for (const Vec& v : P.vertices) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return {hi - lo, false};
    }
    if (d == 2) {
        std::vector<int> cyc = convex_polygon_order(P.vertices);
        int m = static_cast<int>(cyc.size());
        Rat s = 0;
        for (int i = 0; i < m; ++i) {
            const Vec& a = P.vertices[cyc[i]];
            const Vec& b = P.vertices[cyc[(i + 1) % m]];
            s += a[0] * b[1] - b[0] * a[1];
        }
        return {abs(s) / 2, false};
    }

    // Fan from one vertex over the triangulated facets that avoid it.
    HullFacets hf = hull_facets(P);
    const Vec& apex = P.vertices[0];
    Rat vol = 0;
    for (const Facet& f : hf.facets) {
        if (std::find(f.incident.begin(), f.incident.end(), 0) != f.incident.end())
            continue;
        const Vec& c0 = P.vertices[f.incident[0]];
        for (size_t i = 1; i + 1 < f.incident.size(); ++i) {
            Vec u = vec_sub(c0, apex);
            Vec v = vec_sub(P.vertices[f.incident[i]], apex);
            Vec w = vec_sub(P.vertices[f.incident[i + 1]], apex);
            vol += abs(det({u, v, w}));
        }
    }
    return {vol / 6, false};
}

}  // namespace subpoly
