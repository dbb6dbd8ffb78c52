#include "subpoly/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace subpoly {

namespace {

// Dense simplex tableau, minimization form. Columns 0..ncols-1, rhs column at
// index ncols, reduced-cost row at index nrows. Row rhs entries stay >= 0.
struct Tableau {
    Mat t;                  // (nrows+1) x (ncols+1)
    std::vector<int> basis; // basis[r] = column basic in row r
    int nrows, ncols;

    Tableau(int rows, int cols) : nrows(rows), ncols(cols) {
        t.assign(rows + 1, Vec(cols + 1, Rat(0)));
        basis.assign(rows, -1);
    }

    void pivot(int r, int e) {
        Rat inv = 1 / t[r][e];
        for (int c = 0; c <= ncols; ++c) t[r][c] *= inv;
        for (int row = 0; row <= nrows; ++row) {
            if (row == r || t[row][e] == 0) continue;
            Rat factor = t[row][e];
            for (int c = 0; c <= ncols; ++c) t[row][c] -= factor * t[r][c];
        }
        basis[r] = e;
    }

    // Bland's rule; `allowed` masks columns that may enter.
    // Returns false when unbounded (no leaving row for the entering column).
    bool run(const std::vector<bool>& allowed) {
        while (true) {
            int enter = -1;
            for (int c = 0; c < ncols; ++c) {
                if (allowed[c] && t[nrows][c] < 0) {
                    enter = c;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int r = 0; r < nrows; ++r) {
                if (t[r][enter] <= 0) continue;
                Rat ratio = t[r][ncols] / t[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    // Rebuilds the reduced-cost row for the cost vector `cost` (length ncols)
    // under the current basis.
    void set_costs(const Vec& cost) {
        for (int c = 0; c < ncols; ++c) t[nrows][c] = cost[c];
        t[nrows][ncols] = 0;
        for (int r = 0; r < nrows; ++r) {
            int b = basis[r];
            if (b < 0 || t[nrows][b] == 0) continue;
            Rat factor = t[nrows][b];
            for (int c = 0; c <= ncols; ++c) t[nrows][c] -= factor * t[r][c];
        }
    }
};

}  // namespace

Membership membership(const Vec& p, const std::vector<Vec>& points) {
    int d = static_cast<int>(p.size());
    int n = static_cast<int>(points.size());
    for (const auto& v : points)
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("membership: dimension mismatch");

    Membership out;
    if (n == 0) {
        out.inside = false;
        out.c = Vec(d, Rat(0));
        out.b = -1;
        return out;
    }

    // Feasibility of  sum lambda_i (v_i;1) = (p;1), lambda >= 0.
    int rows = d + 1;
    Tableau tab(rows, n + rows);
    std::vector<int> sign(rows, 1);
    for (int r = 0; r < rows; ++r) {
        Rat rhs = (r < d) ? p[r] : Rat(1);
        if (rhs < 0) sign[r] = -1;
        for (int j = 0; j < n; ++j) {
            Rat a = (r < d) ? points[j][r] : Rat(1);
            tab.t[r][j] = sign[r] * a;
        }
        tab.t[r][n + r] = 1;  // artificial
        tab.t[r][rows + n] = sign[r] * rhs;
        tab.basis[r] = n + r;
    }
    Vec cost(n + rows, Rat(0));
    for (int r = 0; r < rows; ++r) cost[n + r] = 1;
    tab.set_costs(cost);
    std::vector<bool> allowed(n + rows, true);
    if (!tab.run(allowed)) throw std::logic_error("phase-1 cannot be unbounded");

    Rat infeas = -tab.t[rows][rows + n];
    if (infeas == 0) {
        out.inside = true;
        for (int r = 0; r < rows; ++r)
            if (tab.basis[r] < n && tab.t[r][rows + n] != 0)
                out.combination.emplace_back(tab.basis[r], tab.t[r][rows + n]);
        // exact self-check of the convex combination
        Vec acc(d, Rat(0));
        Rat total = 0;
        for (auto& [idx, w] : out.combination) {
            if (w < 0) throw std::logic_error("negative weight in combination");
            for (int c = 0; c < d; ++c) acc[c] += w * points[idx][c];
            total += w;
        }
        if (total != 1 || acc != p) throw std::logic_error("combination check failed");
        return out;
    }

    // Optimal duals: reduced cost of artificial r is 1 - y_r (its true cost is
    // 1); undo the row sign flips to express the certificate over the input.
    out.inside = false;
    out.c.assign(d, Rat(0));
    Vec y(rows);
    for (int r = 0; r < rows; ++r) y[r] = sign[r] * (1 - tab.t[rows][n + r]);
    for (int c = 0; c < d; ++c) out.c[c] = y[c];
    out.b = -y[d];
    // exact self-check of the separating functional
    Rat at_p = dot(out.c, p);
    if (!(at_p > out.b)) throw std::logic_error("separation check failed at p");
    for (const auto& v : points)
        if (dot(out.c, v) > out.b) throw std::logic_error("separation check failed");
    return out;
}

std::vector<int> extreme_point_indices(const std::vector<Vec>& points) {
    int n = static_cast<int>(points.size());
    // Collapse duplicates; a repeated point can never be certified extreme.
    std::map<Vec, int> first_seen;
    std::vector<int> distinct;
    for (int i = 0; i < n; ++i)
        if (first_seen.emplace(points[i], i).second) distinct.push_back(i);

    // Pass 1: grow a superset of the vertex set. A point inside the hull of
    // the current superset is inside the full hull, so skipping it is exact;
    // every true vertex is outside each partial hull and survives.
    std::vector<int> superset;
    std::vector<Vec> hull;
    for (int i : distinct) {
        if (!membership(points[i], hull).inside) {
            superset.push_back(i);
            hull.push_back(points[i]);
        }
    }
    // Pass 2: one LP per candidate against the other candidates; the superset
    // spans the full hull, so this decides true extremality.
    std::vector<int> out;
    for (size_t k = 0; k < superset.size(); ++k) {
        std::vector<Vec> others;
        others.reserve(superset.size() - 1);
        for (size_t j = 0; j < superset.size(); ++j)
            if (j != k) others.push_back(points[superset[j]]);
        if (!membership(points[superset[k]], others).inside)
            out.push_back(superset[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LpResult lp_optimize(const Vec& objective, bool maximize,
                     const std::vector<LpConstraint>& constraints) {
    int d = static_cast<int>(objective.size());
    int m = static_cast<int>(constraints.size());
    for (const auto& c : constraints) {
        if (static_cast<int>(c.a.size()) != d)
            throw std::invalid_argument("lp_optimize: constraint dimension mismatch");
        if (c.sense != '<' && c.sense != '>' && c.sense != '=')
            throw std::invalid_argument("lp_optimize: sense must be <, > or =");
    }

    // Free variables split into positive parts; one slack per inequality; one
    // artificial per row.
    int nsplit = 2 * d;
    int nslack = 0;
    for (const auto& c : constraints)
        if (c.sense != '=') ++nslack;
    int ncols = nsplit + nslack + m;
    Tableau tab(m, ncols);

    int slack_at = nsplit;
    for (int r = 0; r < m; ++r) {
        const auto& con = constraints[r];
        Vec row(ncols, Rat(0));
        for (int i = 0; i < d; ++i) {
            row[2 * i] = con.a[i];
            row[2 * i + 1] = -con.a[i];
        }
        if (con.sense != '=') {
            row[slack_at] = (con.sense == '<') ? Rat(1) : Rat(-1);
            ++slack_at;
        }
        Rat rhs = con.b;
        if (rhs < 0) {
            for (auto& v : row) v = -v;
            rhs = -rhs;
        }
        row[nsplit + nslack + r] = 1;  // artificial
        for (int c = 0; c < ncols; ++c) tab.t[r][c] = row[c];
        tab.t[r][ncols] = rhs;
        tab.basis[r] = nsplit + nslack + r;
    }

    Vec phase1_cost(ncols, Rat(0));
    for (int r = 0; r < m; ++r) phase1_cost[nsplit + nslack + r] = 1;
    tab.set_costs(phase1_cost);
    std::vector<bool> allowed(ncols, true);
    if (!tab.run(allowed)) throw std::logic_error("phase-1 cannot be unbounded");
    if (-tab.t[m][ncols] != 0) return {LpResult::Status::infeasible, Rat(0), {}};

    Vec phase2_cost(ncols, Rat(0));
    for (int i = 0; i < d; ++i) {
        Rat c = maximize ? -objective[i] : objective[i];
        phase2_cost[2 * i] = c;
        phase2_cost[2 * i + 1] = -c;
    }
    tab.set_costs(phase2_cost);
    for (int r = 0; r < m; ++r)
        if (tab.basis[r] >= nsplit + nslack) {
            // Degenerate basic artificial: pivot it out on any usable column,
            // or leave it (its row is then redundant and never changes).
            for (int c = 0; c < nsplit + nslack; ++c)
                if (tab.t[r][c] != 0) {
                    tab.pivot(r, c);
                    break;
                }
        }
    for (int c = nsplit + nslack; c < ncols; ++c) allowed[c] = false;
    if (!tab.run(allowed)) return {LpResult::Status::unbounded, Rat(0), {}};

    Vec x(d, Rat(0));
    for (int r = 0; r < m; ++r) {
        int b = tab.basis[r];
        if (b < nsplit) {
            Rat val = tab.t[r][ncols];
            if (b % 2 == 0)
                x[b / 2] += val;
            else
                x[b / 2] -= val;
        }
    }
    Rat value = dot(objective, x);
    return {LpResult::Status::optimal, value, x};
}

}  // namespace subpoly
