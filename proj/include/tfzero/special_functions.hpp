// Complex Gamma function and half-integer modified Bessel functions of the
// second kind.  Both are evaluated from fixed closed forms: a 15-term Lanczos
// sum for Gamma and the finite Laurent sum for K_{n+1/2}.
#pragma once

#include "tfzero/core.hpp"

namespace tfzero {

// Order n + 1/2 with integer n >= 0.
struct HalfIntOrder {
    int n = 0;
    explicit HalfIntOrder(int n_) : n(n_) {
        if (n < 0) throw DomainError("HalfIntOrder: n must be >= 0");
    }
};

// Gamma(s) for complex s.  Accuracy is >= 1e-12 relative for
// Re s in [0.5, 50], |Im s| <= 100; the reflection formula extends the
// domain to Re s < 0.5.  Poles at s = 0, -1, -2, ... raise DomainError.
cplx gamma_complex(cplx s);

// K_{n+1/2}(z) = sqrt(pi/(2z)) e^{-z} * sum_{k=0}^{n} (n+k)!/(k!(n-k)!) (2z)^{-k},
// principal branch of sqrt(z) (cut on the negative reals).  z = 0 is rejected.
cplx bessel_k_half(HalfIntOrder order, cplx z);

// Hermite function h_n with L2 norm 1:
//   h_n(t) = 2^{1/4} (2^n n!)^{-1/2} H_n(sqrt(2 pi) t) e^{-pi t^2},
// where H_n is the physicists' Hermite polynomial.  h_0(t) = 2^{1/4} e^{-pi t^2}.
double hermite_function(int n, double t);

}  // namespace tfzero
