// Quadrature-based evaluation of the ambiguity function, Wigner distribution,
// short-time Fourier transform, Bargmann transform, and Fourier transform.
// Every closed form in the library is validated against these integrals;
// nothing here reuses the closed forms.
#pragma once

#include "tfzero/core.hpp"
#include "tfzero/sampled.hpp"

namespace tfzero {

// A(f,g)(x,xi)  = int f(t + x/2) conj(g(t - x/2)) e^{-2 pi i xi t} dt
cplx oracle_ambiguity(const SampledFunction& f, const SampledFunction& g,
                      PhaseSpacePoint z, double tol);

// W(f,g)(x,xi)  = int f(x + t/2) conj(g(x - t/2)) e^{-2 pi i xi t} dt
cplx oracle_wigner(const SampledFunction& f, const SampledFunction& g,
                   PhaseSpacePoint z, double tol);

// V_g f(x,xi)   = int f(t) conj(g(t - x)) e^{-2 pi i xi t} dt
cplx oracle_stft(const SampledFunction& f, const SampledFunction& g,
                 PhaseSpacePoint z, double tol);

// B f(z)        = 2^{1/4} e^{-pi z^2 / 2} int f(t) e^{-pi t^2} e^{2 pi t z} dt
cplx oracle_bargmann(const SampledFunction& f, cplx z, double tol);

// fhat(xi)      = int f(t) e^{-2 pi i xi t} dt
cplx oracle_fourier(const SampledFunction& f, double xi, double tol);

struct OracleOptions {
    double tol = 1e-9;
    int min_depth = 0;  // forced extra subdivision; convergence self-tests
};

cplx oracle_ambiguity(const SampledFunction& f, const SampledFunction& g,
                      PhaseSpacePoint z, const OracleOptions& opt);
cplx oracle_wigner(const SampledFunction& f, const SampledFunction& g,
                   PhaseSpacePoint z, const OracleOptions& opt);
cplx oracle_stft(const SampledFunction& f, const SampledFunction& g,
                 PhaseSpacePoint z, const OracleOptions& opt);

}  // namespace tfzero
