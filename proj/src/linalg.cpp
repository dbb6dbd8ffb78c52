#include "subpoly/linalg.hpp"

#include <stdexcept>

namespace subpoly {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Rat det(Mat m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: not square");
    Rat result = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            result = -result;
        }
        result *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return result;
}

int rank(Mat m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rat inv = 1 / m[r][col];
        for (size_t rr = r + 1; rr < rows; ++rr) {
            if (m[rr][col] == 0) continue;
            Rat factor = m[rr][col] * inv;
            for (size_t cc = col; cc < cols; ++cc) m[rr][cc] -= factor * m[r][cc];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int affine_rank(const std::vector<Vec>& points) {
    if (points.size() <= 1) return 0;
    Mat diffs;
    for (size_t i = 1; i < points.size(); ++i)
        diffs.push_back(vec_sub(points[i], points[0]));
    return rank(std::move(diffs));
}

std::vector<int> affine_basis_indices(const std::vector<Vec>& points) {
    std::vector<int> picked;
    if (points.empty()) return picked;
    picked.push_back(0);
    Mat basis;
    for (size_t i = 1; i < points.size(); ++i) {
        Mat trial = basis;
        trial.push_back(vec_sub(points[i], points[0]));
        if (rank(trial) > static_cast<int>(basis.size())) {
            basis.push_back(vec_sub(points[i], points[0]));
            picked.push_back(static_cast<int>(i));
        }
    }
    return picked;
}

std::optional<Vec> solve_linear(Mat m, Vec rhs) {
    size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat inv = 1 / m[col][col];
        for (size_t c = col; c < n; ++c) m[col][c] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    return rhs;
}

std::optional<Vec> hyperplane_normal(const std::vector<Vec>& points) {
    if (points.empty()) return std::nullopt;
    size_t d = points[0].size();
    if (points.size() != d) throw std::invalid_argument("hyperplane_normal: need d points");
    // Normal is orthogonal to all difference vectors; find a kernel vector of
    // the (d-1) x d difference matrix by elimination.
    Mat diffs;
    for (size_t i = 1; i < d; ++i) diffs.push_back(vec_sub(points[i], points[0]));
    size_t rows = diffs.size();
    std::vector<int> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t col = 0; col < d && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && diffs[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(diffs[piv], diffs[r]);
        Rat inv = 1 / diffs[r][col];
        for (size_t c = 0; c < d; ++c) diffs[r][c] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || diffs[rr][col] == 0) continue;
            Rat factor = diffs[rr][col];
            for (size_t c = 0; c < d; ++c) diffs[rr][c] -= factor * diffs[r][c];
        }
        pivot_col[r] = static_cast<int>(col);
        ++r;
    }
    if (r != rows) return std::nullopt;  // affinely dependent
    // Free column exists since rows = d-1 < d.
    std::vector<bool> is_pivot(d, false);
    for (size_t i = 0; i < rows; ++i) is_pivot[pivot_col[i]] = true;
    size_t free_col = 0;
    while (free_col < d && is_pivot[free_col]) ++free_col;
    Vec normal(d, Rat(0));
    normal[free_col] = 1;
    for (size_t i = 0; i < rows; ++i) normal[pivot_col[i]] = -diffs[i][free_col];
    return normal;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

}  // namespace subpoly
