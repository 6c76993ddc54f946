// Exact stability machinery: the polynomials A_n, the Hurwitz matrix, and the
// Routh-Hurwitz principal-minor criterion with fraction-free (Bareiss)
// elimination over arbitrary-precision integers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "tfzero/core.hpp"

namespace tfzero {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with exact integer coefficients, highest degree
// first: p(t) = a0 t^n + a1 t^{n-1} + ... + an.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw DomainError("IntPolynomial: empty coefficient list");
    }

    int degree() const { return int(coeffs.size()) - 1; }
    const BigInt& leading() const { return coeffs.front(); }
    // a_j with the convention a_j = 0 for j < 0 or j > degree.
    BigInt at(int j) const {
        if (j < 0 || j > degree()) return 0;
        return coeffs[std::size_t(j)];
    }
};

struct StabilityReport {
    bool is_hurwitz = false;
    std::vector<BigInt> minors;       // Delta_1 ... Delta_n, exact
    bool necessary_ok = false;        // a_j a_{j+1} - a_{j-1} a_{j+2} > 0
    bool sufficient_ok = false;       // a_j a_{j+1} > (21479/10000) a_{j-1} a_{j+2}
    std::optional<int> failing_index; // 1-based index of first non-positive minor
};

// A_n(z) = sum_{k=0}^{n} C(n,k) (n+k)! z^{n-k}, exact coefficients.
IntPolynomial build_An(int n);

// The n-by-n matrix H[i][j] = a_{2j-i} (1-indexed), zero outside 0..n.
// Requires degree >= 1 and a0 > 0.
std::vector<std::vector<BigInt>> hurwitz_matrix(const IntPolynomial& p);

// Exact Routh-Hurwitz verdict.  All principal minors are computed over the
// integers; no floating comparison decides is_hurwitz.  The coefficient
// conditions are tested for every j with all four indices in 0..n
// (j = 1 .. n-2); an empty index set counts as satisfied.
StabilityReport routh_hurwitz(const IntPolynomial& p);

// Determinant of an exact integer matrix (fraction-free, with row pivoting).
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

// Evaluate p at a complex point in double precision.
cplx evaluate(const IntPolynomial& p, cplx z);

}  // namespace tfzero
