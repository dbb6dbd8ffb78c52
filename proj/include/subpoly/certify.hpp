#pragma once

#include <map>
#include <string>
#include <vector>

#include "subpoly/graph.hpp"
#include "subpoly/hull.hpp"
#include "subpoly/rational.hpp"
#include "subpoly/statpoly.hpp"

namespace subpoly {

// Univariate polynomial with rational coefficients, sparse in the exponents.
struct SparsePolynomial {
    std::map<int, Rat> terms;  // exponent -> coefficient, zeros dropped

    // Grammar: "1 - 16/3 x^3 + 11/2 x^4 - 1/2 x^5". Coefficients are integers
    // or fractions, a bare x means x^1, an omitted coefficient means 1.
    // Errors carry the offending position.
    static SparsePolynomial parse(const std::string& s);

    Rat eval(const Rat& x) const;
    std::string str() const;
};

struct SampleCheck {
    Rat min_value;
    Rat argmin;
};

// Minimum of q over the grid {j/grid : j = 0..grid}; grid >= 2.
SampleCheck sample_check(const SparsePolynomial& q, int grid);

enum class CertStatus { certified, inconclusive, refuted };

struct CertifyResult {
    CertStatus status;
    Rat min_value;           // min of q's linearization over the polytope vertices
    std::vector<int> tight;  // vertex indices attaining that minimum
    Rat refute_x;            // witness when refuted: q(refute_x) < 0
    Rat refute_value;
    std::string message;
};

// Decides q(x) >= 0 on [0,1] through a density polytope: writing
// q = 1 + sum_i c_i x^{e_i} with e_i the pattern edge counts, q's linearization
// 1 + <c, v> is minimized over the polytope. A nonnegative minimum certifies q
// (the curve (x^{e_1}, ..., x^{e_d}) lies inside); a negative minimum proves
// nothing by itself, so the grid check either refutes q or leaves it open.
CertifyResult certify_nonneg(const SparsePolynomial& q, const SubgraphPolytope& P,
                             int grid = 128);
CertifyResult certify_nonneg(const SparsePolynomial& q, const GraphVector& fs,
                             int n, int grid = 128);

struct FacetDual {
    Vec c;              // 1 + <c, x> vanishes on the facet
    bool bounds_below;  // true: functional >= 0 on the polytope; false: <= 0
};

// Certificate form of a facet <a, x> <= b: c = -a/b. Facets through the
// origin admit no certificate normalized at constant 1.
FacetDual facet_dual(const Facet& f);

// The certificate as a polynomial, exponents taken from the pattern family.
SparsePolynomial dual_polynomial(const FacetDual& d, const GraphVector& fs);

}  // namespace subpoly
