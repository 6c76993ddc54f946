// Simultaneous-iteration (Aberth-Ehrlich) polynomial root finder, used as an
// independent floating-point check against the exact minor criterion.
#pragma once

#include <vector>

#include "tfzero/core.hpp"
#include "tfzero/hurwitz.hpp"

namespace tfzero {

struct RootResult {
    std::vector<cplx> roots;
    bool converged = false;
    double max_residual = 0.0;  // max over roots of |p(z)| / sum_k |a_k z^k|
};

// All complex roots of the polynomial with the given coefficients (highest
// degree first).  Coefficients must be finite doubles with a nonzero leading
// coefficient.
RootResult aberth_roots(const std::vector<double>& coeffs);

// Maximum real part over all roots of p, refined to a backward-error
// residual below 1e-10.  Throws OracleError with the best iterate's value
// embedded in the message if the iteration fails to converge.
double max_real_root_part(const IntPolynomial& p);

}  // namespace tfzero
