// Closed-form cross-ambiguity functions for the exponential, convolution,
// monomial, and Gumbel-type families, plus the symmetric-exponential zero
// equation.  Conventions follow A(f,g) = int f(t+x/2) conj(g(t-x/2))
// e^{-2 pi i xi t} dt; every formula here is validated against that integral
// by the oracle tests, and complex second parameters enter conjugated.
#pragma once

#include <string>

#include "tfzero/core.hpp"
#include "tfzero/function_spec.hpp"

namespace tfzero {

// A(gamma_a, gamma_b) for gamma_a(t) = e^{-a pi t^2}:
//   (a + conj(b))^{-1/2} exp( -pi (a conj(b) x^2 + xi^2) / (a + conj(b))
//                             + i pi ((a - conj(b)) / (a + conj(b))) x xi ).
// Never zero.  Principal branch of the square root (Re(a+conj(b)) > 0).
cplx amb_gauss(cplx a, cplx b, PhaseSpacePoint z);

// A(eta_a, eta_b) = eta_{a,b}(x) e^{-i pi xi |x|} / (a + b + 2 pi i xi),
// eta_{a,b}(x) = e^{-a x} (x >= 0), e^{b x} (x < 0).  Never zero.
cplx amb_onesided(double a, double b, PhaseSpacePoint z);

// A(f, f) for f = eta_a * eta_{sign b}:
//   (h(u) - h(w)) / (2 (w^2 - u^2)),   h(s) = e^{-s|x|} / s,
// with u = a + i pi xi, w = b + i pi xi (sign +1) or conj(b + i pi xi)
// (sign -1).  Near w^2 = u^2 the difference quotient switches to a Taylor
// form in w - u, which also covers the symmetric exponential a = b, sign -1
// at xi -> 0.  sign +1 requires a != b (degenerate denominator).
cplx amb_conv_exp(double a, double b, int sign, PhaseSpacePoint z);

// A(e^{-a|.|}, e^{-a|.|}), real-valued:
//   e^{-a|x|} a (a sin(pi xi |x|) + pi xi cos(pi xi |x|)) / (pi xi (a^2 + pi^2 xi^2)),
// with the series branch at pi xi -> 0 giving e^{-a|x|} (|x| + 1/a).
cplx amb_sym_exp(double a, PhaseSpacePoint z);

// Residual of the zero equation for the symmetric exponential:
//   e^{-2 pi i xi |x|} - (a + pi i xi) / (a - pi i xi),   xi != 0.
// Roots of this residual are zeros of A(e^{-a|.|}, e^{-a|.|}).
cplx amb_sym_exp_zero_equation(double a, double x, double xi);

// A(t eta_a, eta_a):
//   x >= 0:  e^{-(a + i pi xi) x} (2 x (a + i pi xi) + 1) / (4 (a + i pi xi)^2)
//   x <  0:  e^{ (a + i pi xi) x} / (4 (a + i pi xi)^2).
// Never zero: Re(2x(a + i pi xi) + 1) >= 1 for x >= 0.
cplx amb_teta_cross(double a, PhaseSpacePoint z);

// A(gamma_{a,b}, gamma_{c,d}) for gamma_{a,b}(t) = exp(a t - b e^t):
//   e^{(a-c) x/2} (b e^{x/2} + d e^{-x/2})^{-(a+c) + 2 pi i xi}
//     * Gamma(a + c - 2 pi i xi).
// Never zero (Gamma has no zeros).
cplx amb_gumbel(double a, double b, double c, double d, PhaseSpacePoint z);

// A(f_n, f_n) for f_n(t) = t^n e^{-t} 1_{(0,inf)}:
//   e^{-|x|(1 + i pi xi)} (2 + 2 pi i xi)^{-(2n+1)} A_n(|x| (2 + 2 pi i xi)),
// equal to (2n)! (2 + 2 pi i xi)^{-(2n+1)} at x = 0.
cplx amb_monomial(int n, PhaseSpacePoint z);

// Same value through the Bessel route (x != 0):
//   (n!/sqrt(pi)) (|x| / (2 (1 + i pi xi)))^{n + 1/2}
//     * K_{n+1/2}(|x| (1 + i pi xi)).
cplx amb_monomial_bessel(int n, PhaseSpacePoint z);

// ---------------------------------------------------------------------------

enum class FormulaId {
    Gauss,
    OneSided,
    ConvSameSign,
    ConvMixedSign,
    TEtaCross,
    Gumbel,
    MonomialSelf,
};

const char* to_string(FormulaId id);
FormulaId formula_id_from_string(const std::string& name);

// A kernel pair: the pairing (f, g) together with the closed form that
// evaluates its ambiguity function.
struct KernelPair {
    FormulaId id = FormulaId::Gauss;
    cplx ga{1.0, 0.0}, gb{1.0, 0.0};  // Gauss parameters
    double a = 1.0, b = 1.0;          // real parameters
    double c = 1.0, d = 1.0;          // Gumbel second pair
    int sign = +1;                    // convolution sign
    int n = 0;                        // monomial degree

    static KernelPair gauss(cplx a, cplx b);
    static KernelPair one_sided(double a, double b);
    static KernelPair conv(double a, double b, int sign);
    static KernelPair t_eta_cross(double a);
    static KernelPair gumbel(double a, double b, double c, double d);
    static KernelPair monomial_self(int n);

    FunctionSpec f() const;
    FunctionSpec g() const;
};

cplx evaluate(const KernelPair& pair, PhaseSpacePoint z);

// Modulus |A(f,g)(z)| through an independent real-arithmetic route
// (polar pieces; the Bessel route for the monomial kernel).
double analytic_modulus(const KernelPair& pair, PhaseSpacePoint z);

// The seven zero-free reference kernels exercised by the validation suites.
std::vector<KernelPair> standard_zero_free_kernels();

// JSON wire format: {"formula": "...", params...}.
std::string kernel_pair_to_json(const KernelPair& pair);
KernelPair kernel_pair_from_json(const std::string& json_text);

}  // namespace tfzero
