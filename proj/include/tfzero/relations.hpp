// Exact algebraic relations between the Wigner distribution W, the ambiguity
// function A, and the short-time Fourier transform V, plus the covariance
// checks under phase-space shifts and the Fourier transform.
//
// Frozen identities (the single source of truth for phase conventions):
//   W(f,g)(x,xi)  = e^{4 pi i x xi} V_{Ig} f(2x, 2xi)
//   A(f,g)(x,xi)  = e^{i pi xi x}  V_g  f(x, xi)
//   A(f,g)(x,xi)  = (1/2) W(f, Ig)(x/2, xi/2)
#pragma once

#include "tfzero/core.hpp"
#include "tfzero/function_spec.hpp"
#include "tfzero/oracle.hpp"

namespace tfzero {

// Result of rewriting a transform value at z as another transform: the value
// and argument of the target transform, plus whether the window g must be
// replaced by Ig.
struct ConversionResult {
    cplx value;
    PhaseSpacePoint z;
    bool window_reflected = false;
};

// Rewrites `value = T_from(f, g)(z)` as the target transform:
// T_to(f, g')(z') = value', with g' = Ig when window_reflected.
// Composing a conversion with its inverse is the identity.
ConversionResult convert_value(TransformKind kind_from, TransformKind kind_to,
                               cplx value, PhaseSpacePoint z);

// max over the grid of |W(pi(w)f, pi(w')g)(z)
//   - e^{2 pi i <w-w', z> + i pi (b+b')(a-a')} W(f,g)(z - (w+w')/2)|,
// both sides through the quadrature oracle.
double shift_covariance_check(const FunctionSpec& f, const FunctionSpec& g,
                              PhaseSpacePoint w, PhaseSpacePoint w2,
                              const GridSpec& grid, double tol = 1e-8);

// max over the grid of |W(fhat, ghat)(z) - W(f,g)(Jz)| with Jz = (-xi, x).
// fhat/ghat come from the catalog's closed-form Fourier transforms
// (themselves validated pointwise against oracle_fourier).
double fourier_covariance_check(const FunctionSpec& f, const FunctionSpec& g,
                                const GridSpec& grid, double tol = 1e-8);

// The Fourier-case argument rotation frozen by the Gaussian/one-sided
// validation: J(x, xi) = (-xi, x).
PhaseSpacePoint fourier_rotation(PhaseSpacePoint z);

// max over `points` of |A(f1*f2, g1*g2)(x,xi)
//   - int A(f1,g1)(t,xi) A(f2,g2)(x-t,xi) dt|
// for the exponential pair f = eta_a * eta_b: the left side is the closed
// convolution kernel, the right side integrates the closed one-parameter
// kernels.
double convolution_identity_check(double a, double b,
                                  const std::vector<PhaseSpacePoint>& points,
                                  double tol = 1e-8);

// |W(f+g) - W(f-g) - 4 Re W(f,g)| at z, everything through the oracle.
double polarization_residual(const SampledFunction& f, const SampledFunction& g,
                             PhaseSpacePoint z, double tol = 1e-9);

}  // namespace tfzero
