#include "subpoly/certify.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "subpoly/lp.hpp"
#include "subpoly/statpoly.hpp"

namespace subpoly {

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
}

}  // namespace

SparsePolynomial SparsePolynomial::parse(const std::string& s) {
    SparsePolynomial p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&]() -> Int {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) parse_fail(start, "expected a number");
        return Int(s.substr(start, i - start));
    };

    skip_ws();
    if (i == s.size()) parse_fail(i, "empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) break;

        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            parse_fail(i, "expected '+' or '-' between terms");
        }
        first = false;

        bool have_coeff = false;
        Rat coeff = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            Int num = read_int();
            Int den = 1;
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = read_int();
                if (den == 0) parse_fail(i, "zero denominator");
            }
            coeff = Rat(num) / Rat(den);
            have_coeff = true;
        }

        int expo = 0;
        skip_ws();
        if (i < s.size() && s[i] == 'x') {
            ++i;
            expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                Int e = read_int();
                if (e > 64) parse_fail(i, "exponent too large");
                expo = e.convert_to<int>();
            }
        } else if (!have_coeff) {
            parse_fail(i, "expected a coefficient or x");
        }

        p.terms[expo] += sign * coeff;
        if (p.terms[expo] == 0) p.terms.erase(expo);
    }
    if (p.terms.empty()) parse_fail(s.size(), "polynomial is identically zero");
    return p;
}

Rat SparsePolynomial::eval(const Rat& x) const {
    Rat v = 0;
    for (const auto& [e, c] : terms) v += c * rat_pow(x, e);
    return v;
}

std::string SparsePolynomial::str() const {
    std::string out;
    for (const auto& [e, c] : terms) {
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool unit = a == 1 && e != 0;
        if (!unit) out += rat_str(a);
        if (e >= 1) {
            if (!unit) out += " ";
            out += "x";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

SampleCheck sample_check(const SparsePolynomial& q, int grid) {
    if (grid < 2) throw std::invalid_argument("sample_check: grid must be >= 2");
    SampleCheck sc{q.eval(0), Rat(0)};
    for (int j = 1; j <= grid; ++j) {
        Rat x = Rat(j) / grid;
        Rat v = q.eval(x);
        if (v < sc.min_value) {
            sc.min_value = v;
            sc.argmin = x;
        }
    }
    return sc;
}

CertifyResult certify_nonneg(const SparsePolynomial& q, const SubgraphPolytope& P,
                             int grid) {
    if (P.kind != PolyKind::density)
        throw std::invalid_argument("certify_nonneg: needs a density polytope");
    const std::vector<int>& ecs = P.Fs.edge_counts();
    if (std::set<int>(ecs.begin(), ecs.end()).size() != ecs.size())
        throw std::invalid_argument(
            "certify_nonneg: patterns with equal edge counts are ambiguous");

    auto cterm = q.terms.find(0);
    if (cterm == q.terms.end() || cterm->second != 1)
        throw std::invalid_argument("certify_nonneg: constant term must be exactly 1");
    Vec c(ecs.size(), Rat(0));
    for (const auto& [e, coeff] : q.terms) {
        if (e == 0) continue;
        auto it = std::find(ecs.begin(), ecs.end(), e);
        if (it == ecs.end())
            throw std::invalid_argument("certify_nonneg: exponent " + std::to_string(e) +
                                        " matches no pattern edge count");
        c[it - ecs.begin()] = coeff;
    }

    CertifyResult res;
    res.min_value = Rat(1) + dot(c, P.hull.vertices[0]);
    for (const Vec& v : P.hull.vertices)
        res.min_value = std::min(res.min_value, Rat(1) + dot(c, v));
    for (std::size_t i = 0; i < P.hull.vertices.size(); ++i)
        if (Rat(1) + dot(c, P.hull.vertices[i]) == res.min_value)
            res.tight.push_back(static_cast<int>(i));

    if (res.min_value >= 0) {
        res.status = CertStatus::certified;
        res.message = "linearization is nonnegative on the order-" +
                       std::to_string(P.n) + " polytope (minimum " +
                       rat_str(res.min_value) + ")";
        return res;
    }
    SampleCheck sc = sample_check(q, grid);
    if (sc.min_value < 0) {
        res.status = CertStatus::refuted;
        res.refute_x = sc.argmin;
        res.refute_value = sc.min_value;
        res.message = "q(" + rat_str(sc.argmin) + ") = " + rat_str(sc.min_value) + " < 0";
    } else {
        res.status = CertStatus::inconclusive;
        res.message = "linearization dips to " + rat_str(res.min_value) +
                       " on the polytope but q stays nonnegative on the grid";
    }
    return res;
}

CertifyResult certify_nonneg(const SparsePolynomial& q, const GraphVector& fs,
                             int n, int grid) {
    return certify_nonneg(q, build_polytope(fs, n, PolyKind::density), grid);
}

FacetDual facet_dual(const Facet& f) {
    if (f.offset == 0)
        throw std::invalid_argument(
            "facet_dual: facet through the origin has no certificate normalized at 1");
    FacetDual d;
    for (const Rat& a : f.normal) d.c.push_back(-a / f.offset);
    d.bounds_below = f.offset > 0;
    return d;
}

SparsePolynomial dual_polynomial(const FacetDual& d, const GraphVector& fs) {
    if (d.c.size() != static_cast<std::size_t>(fs.size()))
        throw std::invalid_argument("dual_polynomial: dimension mismatch");
    SparsePolynomial p;
    p.terms[0] = 1;
    for (int i = 0; i < fs.size(); ++i)
        if (d.c[i] != 0) p.terms[fs.edge_counts()[i]] += d.c[i];
    return p;
}

}  // namespace subpoly
