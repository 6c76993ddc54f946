// Hermite-window STFT via the Bargmann calculus and the zero theory of
// polyanalytic polynomials: the transform kernel B_g f(z) =
// sum_k (1/k!) Q^{(k)}(z) conj(P^{(k)}(-pi z)), its degree bookkeeping,
// the total-degree zero criterion, and the explicit degree-1 roots.
#pragma once

#include <utility>
#include <vector>

#include "tfzero/core.hpp"
#include "tfzero/zero_scan.hpp"

namespace tfzero {

// Univariate polynomial with complex coefficients, ascending degree.
struct ComplexPolynomial {
    std::vector<cplx> coeffs;  // c_0 + c_1 z + ...

    ComplexPolynomial() : coeffs{cplx(0.0, 0.0)} {}
    explicit ComplexPolynomial(std::vector<cplx> c);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    cplx eval(cplx z) const;
    ComplexPolynomial derivative() const;
};

// sum_{j,k} c[j][k] z^j conj(z)^k, dense coefficient matrix.
struct PolyanalyticPolynomial {
    std::vector<std::vector<cplx>> c;  // c[j][k]

    int deg_z() const;
    int deg_conj() const;
    int total_degree() const;
    cplx eval(cplx z) const;
    cplx at(int j, int k) const;
};

// V_{h_n} f at the point (x, -xi), z = x + i xi, for f with Bargmann
// transform Bf (a polynomial, i.e. f a finite Hermite combination):
//   (pi^n n!)^{-1/2} e^{pi i x xi} e^{-pi |z|^2 / 2}
//     * sum_{k=0}^n C(n,k) (-pi conj(z))^{n-k} (d^k Bf)(z).
cplx hermite_window_stft(int n, const ComplexPolynomial& bf, cplx z);

// The polyanalytic Bargmann transform kernel for window polynomial P and
// Bargmann polynomial Q:  sum_k (1/k!) Q^{(k)}(z) conj(P^{(k)}(-pi z)).
// Conjugation acts on the coefficients of P^{(k)} and turns z powers into
// conj(z) powers, so the (j,k) coefficient is q-part * conj(p_k) (-pi)^k.
// Degrees: deg_z = deg Q, deg_conj = deg P, total = deg P + deg Q.
PolyanalyticPolynomial polyanalytic_bargmann(const ComplexPolynomial& P,
                                             const ComplexPolynomial& Q);

// Total-degree criterion: a zero is guaranteed when
// total degree > 2 * min(deg_z, deg_conj).
bool balk_degree_check(const PolyanalyticPolynomial& qp);

// The two roots of pi (z + a)(conj(z) + conj(b)) - 1 = 0:
// with c = sqrt(pi)(conj(b) - conj(a)) = rho e^{i theta}, the reduced real
// equation xi (xi + rho) = 1 has roots (-rho +- sqrt(rho^2 + 4))/2; each maps
// back through zeta = xi e^{-i theta}, z = zeta / sqrt(pi) - a.
std::pair<cplx, cplx> degree1_roots(cplx a, cplx b);

// Zero search over a box via zero_scan; when the box is omitted it starts at
// [-R, R]^2 with R = 1 + (sum |c|) / |leading| and doubles up to 4 times.
ZeroReport polyanalytic_zero_search(const PolyanalyticPolynomial& qp,
                                    const GridSpec& box, double zero_tol = 1e-8);
ZeroReport polyanalytic_zero_search_auto(const PolyanalyticPolynomial& qp,
                                         double zero_tol = 1e-8);

}  // namespace tfzero
